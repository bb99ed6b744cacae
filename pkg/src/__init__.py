from .core import Configuration, GramMatrix, Potential, EnergyReport, GaleDual, MStarSolution
from .utils import *
from .config import *
