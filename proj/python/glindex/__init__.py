"""Betti numbers, Green-Lazarsfeld indices and forbidden-subclutter searches."""
from ._glindex import (
    Clutter,
    DimensionError,
    InputError,
    MonomialIdeal,
    UnsupportedInput,
    beta,
    betti_table,
    catalog,
    catalog_names,
    census,
    enumerate_minimal,
    family_d,
    gl_index,
    is_c_free,
    is_d_free,
    is_linearly_presented,
    kappa,
    multigraded_betti,
    parse,
)

__all__ = [
    "Clutter",
    "DimensionError",
    "InputError",
    "MonomialIdeal",
    "UnsupportedInput",
    "beta",
    "betti_table",
    "catalog",
    "catalog_names",
    "census",
    "enumerate_minimal",
    "family_d",
    "gl_index",
    "is_c_free",
    "is_d_free",
    "is_linearly_presented",
    "kappa",
    "multigraded_betti",
    "parse",
]
