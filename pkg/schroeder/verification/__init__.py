"""Cross-formula verification behind the ``verify`` command."""

from .suite import CheckResult, VerificationReport, VerificationSuite, little_schroeder_numbers

__all__ = ['CheckResult', 'VerificationReport', 'VerificationSuite', 'little_schroeder_numbers']
