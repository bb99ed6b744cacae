from .mstar import *
from .closed_form import *
from .certificates import *
