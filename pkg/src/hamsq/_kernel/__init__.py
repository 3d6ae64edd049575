"""Search-kernel backend selection.

The compiled Cython kernel (`hamsq._kernel._fast`) is preferred when it
built successfully; otherwise the pure-Python twin is used.  Both expose
the same functions with identical traversal order and node accounting,
so witnesses do not depend on the backend.  Set HAMSQ_PURE=1 to force
the pure backend (used by the benchmark and the parity tests).
"""

import os

from . import pure

FOUND = pure.FOUND
NONE = pure.NONE
UNKNOWN = pure.UNKNOWN
LABEL_E = pure.LABEL_E
LABEL_P = pure.LABEL_P
LABEL_J = pure.LABEL_J
LABEL_U = pure.LABEL_U

if os.environ.get("HAMSQ_PURE"):
    BACKEND = "pure"
    ham_search = pure.ham_search
    eps_search = pure.eps_search
else:
    try:
        from . import _fast

        BACKEND = "compiled"
        ham_search = _fast.ham_search
        eps_search = _fast.eps_search
    except ImportError:
        BACKEND = "pure"
        ham_search = pure.ham_search
        eps_search = pure.eps_search
