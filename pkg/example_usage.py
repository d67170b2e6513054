#!/usr/bin/env python3
"""
Example Usage of the Schroeder Hopf Toolkit
===========================================

Walks through trees, the antipode and cumulants on small inputs.
"""

import sys
from pathlib import Path

# Ensure we can import from the current directory
if __name__ == '__main__':
    sys.path.insert(0, str(Path(__file__).parent))

from schroeder.combinatorics.partitions import tree_to_ncp
from schroeder.combinatorics.trees import enum_schroder, murua_coefficient, parse_tree
from schroeder.data.generators import semicircle_moments
from schroeder.hopf.antipode import antipode
from schroeder.hopf.coproduct import coproduct
from schroeder.ncprob.cumulants import cumulants_from_moments
from schroeder.ncprob.wick import wick
from schroeder.utils.logger import setup_logger


def example_trees():
    """Example: trees of degree 3 with their partitions."""
    logger = setup_logger()
    logger.info("=" * 80)
    logger.info("Example: Schroeder trees of degree 3")
    logger.info("=" * 80)

    for t in enum_schroder(3):
        logger.info(f"{t.serialized:<20} pi(t) = {tree_to_ncp(t)}   omega = {murua_coefficient(t)}")

    t = parse_tree('(o,(o,o,(o,o)),o,(o,(o,o,o,o)))')
    logger.info(f"\nA degree-{t.degree} tree has partition {tree_to_ncp(t)}")


def example_antipode():
    """Example: coproduct and antipode of short words."""
    logger = setup_logger()
    logger.info("=" * 80)
    logger.info("Example: Coproduct and antipode")
    logger.info("=" * 80)

    logger.info(f"Delta(a1a2) = {coproduct((1, 2))}")
    for method in ('schroder', 'takeuchi', 'bogoliubov', 'convolution'):
        logger.info(f"S(a1a2a3) via {method}: {antipode((1, 2, 3), method)}")


def example_cumulants():
    """Example: cumulants of the semicircle law."""
    logger = setup_logger()
    logger.info("=" * 80)
    logger.info("Example: Semicircle cumulants")
    logger.info("=" * 80)

    phi = semicircle_moments(6)
    for kind in ('free', 'boolean', 'monotone'):
        c = cumulants_from_moments(kind, phi)
        values = ', '.join(str(c.table[(1,) * n]) for n in range(1, 7))
        logger.info(f"{kind:>8}: {values}")
    logger.info(f"W(a1a1) = {wick((1, 1), phi)}")


def main():
    """Main function with menu."""
    print("\n" + "=" * 80)
    print("Schroeder Hopf Toolkit - Example Usage")
    print("=" * 80)
    print("\nSelect an example to run:")
    print("1. Trees and partitions")
    print("2. Coproduct and antipode")
    print("3. Semicircle cumulants")
    print("4. Run all examples")
    print()

    choice = input("Enter choice (1-4): ").strip()
    print()

    if choice == '1':
        example_trees()
    elif choice == '2':
        example_antipode()
    elif choice == '3':
        example_cumulants()
    elif choice == '4':
        example_trees()
        print("\n")
        example_antipode()
        print("\n")
        example_cumulants()
    else:
        print("Invalid choice. Please run again and select 1-4.")


if __name__ == '__main__':
    main()
