from .args import *
from .tolerances import ToleranceMixin
