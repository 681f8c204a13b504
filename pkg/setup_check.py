#!/usr/bin/env python3
"""Check that the toolkit's dependencies and environment settings are usable."""

import sys
from typing import Mapping, Optional


def check_dependencies() -> bool:
    """Check if required Python packages are installed."""
    required = [('numpy', 'NumPy'), ('networkx', 'NetworkX'), ('pytest', 'pytest'),
                ('hypothesis', 'Hypothesis')]
    all_ok = True

    for module, label in required:
        try:
            package = __import__(module)
            print(f"✓ {label}: {getattr(package, '__version__', 'installed')}")
        except ImportError:
            print(f"✗ {label}: Not installed")
            all_ok = False

    return all_ok


def check_environment(environ: Optional[Mapping[str, str]] = None) -> bool:
    """Check that the MATROID_* environment variables parse and lie within their limits."""
    from config import Config
    from matroid_errors import ConfigError

    try:
        config = Config.from_env(environ)
    except ConfigError as e:
        print(f"✗ {e}")
        return False

    print(f"✓ Size caps: coproduct n <= {config.coproduct_n}, canonical form n <= {config.canon_n}, "
          f"orderings n <= {config.perm_n}, census n <= {config.census_n}")
    print(f"✓ Workers: {config.threads}, output format: {config.output_format}")
    print(f"✓ Canonical-form cache: {config.cache_size} entries")
    return True


def check_smoke() -> bool:
    """Build a small freedom matroid and its coproduct."""
    try:
        from freedom import build
        from hopf import coproduct
        M = build('0101').matroid
        total = coproduct(M).total()
    except Exception as e:
        print(f"✗ Smoke test: {type(e).__name__}: {e}")
        return False
    if total != 16:
        print(f"✗ Smoke test: coproduct of M_0101 has {total} subsets, expected 16")
        return False
    print("✓ Smoke test: M_0101 built, coproduct covers all 16 subsets")
    return True


def main():
    """Run all checks."""
    print("Matroid Coalgebra Toolkit - Setup Check")
    print("=" * 60)

    print("\n1. Checking Python dependencies...")
    deps_ok = check_dependencies()

    print("\n2. Checking environment variables...")
    env_ok = check_environment()

    smoke_ok = False
    if deps_ok and env_ok:
        print("\n3. Running a smoke test...")
        smoke_ok = check_smoke()

    print("\n" + "=" * 60)

    if deps_ok and env_ok and smoke_ok:
        print("✓ All checks passed! You're ready to run the toolkit.")
        print("\nTry:")
        print("  python matroid_cli.py matrix-c --n 4 --r 2")
        print("  python matroid_cli.py verify")
        return 0
    else:
        print("✗ Some checks failed. Please fix the issues above.")

        if not deps_ok:
            print("\nTo install Python dependencies:")
            print("  pip install -r requirements.txt")

        if not env_ok:
            print("\nUnset the offending MATROID_* variable or give it a value within its limit.")

        return 1


if __name__ == '__main__':
    sys.exit(main())
