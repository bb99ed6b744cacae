from .commands import *
from .manifest import *
