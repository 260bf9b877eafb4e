#!/usr/bin/env python3
"""
Installation check for the distributed signaling lab
Verifies that the dependencies import and that the core modules run.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def check_dependencies():
    """Required third-party packages."""
    print("Checking dependencies...")

    required_packages = ['numpy', 'pandas', 'networkx', 'joblib', 'tqdm']

    missing_packages = []
    for package in required_packages:
        try:
            __import__(package)
            print(f"   OK {package}")
        except ImportError:
            print(f"   ERROR {package} - NOT INSTALLED")
            missing_packages.append(package)

    return len(missing_packages) == 0


def check_core_imports():
    print("\nChecking core imports...")

    try:
        from src.dsp_instance import DSPInstance  # noqa: F401
        from src.dsp_solver import DSPSolver  # noqa: F401
        from src.solution import Solution  # noqa: F401
        print("   OK instance, solver and solution")
    except Exception as e:
        print(f"   ERROR core modules: {e}")
        return False

    try:
        from src.mechanism import DSPGame, shapley_subsets  # noqa: F401
        print("   OK mechanism")
    except Exception as e:
        print(f"   ERROR mechanism: {e}")
        return False

    return True


def check_functionality():
    """Solve the identity example and check its known optimum."""
    print("\nChecking the identity example...")

    try:
        from fractions import Fraction

        from src.dsp_solver import DSPSolver
        from src.generators import ident4
        from src.mechanism import DSPGame, poa_pos

        instance = ident4()
        solution = DSPSolver(instance).solve("exact")
        print(f"   OK exact revenue {solution.revenue}")
        if solution.revenue != Fraction(1, 2):
            print("   ERROR expected revenue 1/2")
            return False

        report = poa_pos(DSPGame(instance))
        print(f"   OK price of anarchy {report.poa}, price of stability {report.pos}")
        return True

    except Exception as e:
        print(f"   ERROR during the check: {e}")
        return False


def main():
    print("INSTALLATION CHECK - DISTRIBUTED SIGNALING LAB")
    print("=" * 60)

    all_checks_passed = True

    if not check_dependencies():
        all_checks_passed = False

    if not check_core_imports():
        all_checks_passed = False

    if not check_functionality():
        all_checks_passed = False

    print("\n" + "=" * 60)
    if all_checks_passed:
        print("SUCCESS - ALL CHECKS PASSED")
        print("\nNext steps:")
        print("   - Run: python demo_complete.py")
        print("   - Tests: pytest")
    else:
        print("ERROR - SOME CHECKS FAILED")
        print("Check the dependencies with: pip install -r requirements.txt")

    return all_checks_passed


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
