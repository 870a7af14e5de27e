# -*- coding: utf-8 -*-
__version__ = "0.1.0"

from .bounds import BoundsEngine
from .bounds import k_bounds
from .bounds import ocan_bounds
from .codes import Code
from .codes import verify_covering
from .designs import OrderedArray
from .designs import verify_oca
from .errors import ConstructionError
from .errors import DependencyError
from .errors import FormatError
from .errors import InvalidArgumentError
from .errors import ResourceLimitError
from .errors import RTCoverError
from .metric import RTSpace
from .metric import rt_distance
from .metric import sphere_volume
from .poset import RTPoset
from .search import SearchBudget
