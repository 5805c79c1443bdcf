"""Certified verification of the integers with two representations as a
Fibonacci number minus a Tribonacci number.

The heavy lifting lives in the C++ extension `_fibtri`; this package just
re-exports it.
"""

try:
    from fibtri._fibtri import (  # installed layout
        CertificationError,
        bounds_chain,
        cf_quotients,
        constants,
        convergent,
        fibonacci,
        lucas,
        reduce_instance,
        run_campaign,
        search,
        tribonacci,
        verify,
        __version__,
    )
except ImportError:  # build-tree layout
    from _fibtri import (
        CertificationError,
        bounds_chain,
        cf_quotients,
        constants,
        convergent,
        fibonacci,
        lucas,
        reduce_instance,
        run_campaign,
        search,
        tribonacci,
        verify,
        __version__,
    )

__all__ = [
    "CertificationError",
    "bounds_chain",
    "cf_quotients",
    "constants",
    "convergent",
    "fibonacci",
    "lucas",
    "reduce_instance",
    "run_campaign",
    "search",
    "tribonacci",
    "verify",
    "__version__",
]
