"""Schroeder trees and non-crossing partitions."""
