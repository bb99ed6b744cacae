from .errors import *
from .linalg import *
from .seeding import *
