from .builders import *
from .properties import *
from .gale import *
