"""Tableaux, tropical matrices and identity checking for a finite monoid."""

try:
    from ._stylic import *  # noqa: F401,F403
except ImportError:
    # In-tree test runs put the extension next to this package, not inside it.
    from _stylic import *  # noqa: F401,F403
