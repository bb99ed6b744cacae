from .early_stopping import *
from .sphere_descent import *
from .experiments import *
