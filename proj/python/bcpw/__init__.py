"""Bicomplex analysis toolkit.

Idempotent algebra, D-valued quadrature, bicomplex Fourier transforms,
half-plane extensions, band-limited synthesis, and Cauchy integrals,
with the verification suites exposed through run_suite.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
