"""Exact computer algebra for double affine Hecke algebras, their intertwiners and induced modules."""
from ._errors import *  # NOQA: F403 - exceptions are part of the algebra interface
from ._laurent import *  # NOQA: F403
from ._fraction import *  # NOQA: F403
from ._perm import *  # NOQA: F403
from ._params import *  # NOQA: F403
from ._hecke import *  # NOQA: F403
from ._daha import *  # NOQA: F403
from ._intertwiner import *  # NOQA: F403
from ._grammar import *  # NOQA: F403
from ._linalg import *  # NOQA: F403
from ._module import *  # NOQA: F403
from ._table import *  # NOQA: F403
from ._endo import *  # NOQA: F403
from ._qtorus import *  # NOQA: F403
from ._rea import *  # NOQA: F403
