from .vector_files import *
from .constructions import *
