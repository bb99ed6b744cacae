from .potentials import *
from .angles import *
