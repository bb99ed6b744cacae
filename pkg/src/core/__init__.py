from .configuration import *
from .potential import *
from .dual import *
from .auxiliary import *
from .optimization import *
from .manifest import *
