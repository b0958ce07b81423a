"""Exact Rankin and Berge-Martinet invariants of lattices built from codes."""

from ._core import (
    CapExceeded,
    Code,
    InconsistentBounds,
    InvalidArgument,
    Lattice,
    MismatchedCertificate,
    NotAMember,
    ParseError,
    Radical,
    RankDeficient,
    RankinError,
    __version__,
    asymptotic,
    bounds,
    d_l,
    extended_hamming,
    family,
    full_code,
    gamma,
    gamma_prime,
    parity_check,
    parse_spec,
    reed_muller,
    reed_muller_generators,
    verify,
    zero_code,
)


def load_spec(path):
    """Read a spec file; returns a Code, or a Lattice for the `rows` form."""
    with open(path, encoding="utf-8") as handle:
        return parse_spec(handle.read())


__all__ = [name for name in dir() if not name.startswith("_")]
