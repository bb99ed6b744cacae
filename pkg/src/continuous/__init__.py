from .polynomials import *
from .gegenbauer import *
from .measures import *
