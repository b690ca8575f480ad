# SL(5) Computer-Algebra Workbench Package
__version__ = "1.0.0"
__author__ = "SL5 Workbench Team"
__description__ = "Exact SL(5) representation-ring series, superalgebra level decompositions and zero-mode cohomology"
