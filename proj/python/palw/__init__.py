"""Palindromic and commutator width oracles for finite groups and wreath products."""

from ._palw import *  # noqa: F401,F403
from ._palw import CapExceeded, InputError, InvariantBreach, Notion

__all__ = [name for name in dir() if not name.startswith("_")]
