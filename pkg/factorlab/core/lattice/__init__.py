from .basis import LatticeBasis
from .lll import lll_reduce, is_reduced
