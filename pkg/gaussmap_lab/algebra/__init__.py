from gaussmap_lab.algebra.points import INF, SpherePoint, as_point, is_inf
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap, normalize, rational
from gaussmap_lab.algebra.residue import residue, residue_sum
from gaussmap_lab.algebra.roots import RootCluster, roots
from gaussmap_lab.algebra.scalars import I, ONE, ZERO, ExactComplex, Scalar, exact

__all__ = [
    "I",
    "INF",
    "ONE",
    "ZERO",
    "ExactComplex",
    "Poly",
    "RationalMap",
    "RootCluster",
    "Scalar",
    "SpherePoint",
    "as_point",
    "exact",
    "is_inf",
    "normalize",
    "rational",
    "residue",
    "residue_sum",
    "roots",
]
