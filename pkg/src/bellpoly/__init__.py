"""Exact partial Bell, potential and factorial polynomials with their number families."""

from .bell import a_table, abell, bell_bruteforce, bell_recurrence, bell_table
from .combinat import (binomial, cycle, falling, lah_signed, lah_unsigned, rising, stirling1_signed,
                       stirling2)
from .facpoly import lower, potential, upper
from .polyring import Polynomial, parse
from .series import Series
from .verify import run_all, run_identity

__version__ = "0.1.0"
