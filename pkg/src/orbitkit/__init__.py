"""Exact classification of Borel orbits on the nilradical of so_5 (type B2)."""

from .fields import GF, QQ, CharacteristicTwoError, FieldMismatchError, FieldScalar, sqrt_witness
from .lie import (
    BorelWord,
    Matrix5,
    NilradicalPoint,
    RootLabel,
    adjoint,
    apply_word,
    bracket,
    centralizer_dimension,
    coordinates,
    from_coordinates,
    is_in_so5,
    is_in_SO5,
    root_group_element,
    root_vector,
    torus_element,
)
from .orbits import (
    OrbitDescriptor,
    OrbitId,
    Poly,
    catalog,
    classify,
    closure_leq,
    descriptor,
    hasse_edges,
    quadric,
    transporter,
)

__version__ = "0.1.0"
