"""Exact q-series arithmetic, gap-condition partition families and an identity catalog."""

from .catalog import expand, list_identities, verify, verify_all
from .errors import (
    DivergenceError,
    DomainError,
    InexactDivisionError,
    InversionError,
    MembershipError,
    MoveError,
    ParseError,
    PoleError,
    QPVError,
    TruncationError,
    UsageError,
)
from .hypergeom import HypergeomSpec, phi, rphis
from .partitions import (
    GG,
    LG,
    MOD,
    RESIDUE,
    UG,
    Family,
    FamilyConstraint,
    Partition,
    compose,
    decompose,
    enumerate_family,
    gf_of_family,
    parse_family,
    parse_partition,
)
from .recurrence import RecurrenceSpec, check_recurrence
from .series import (
    LaurentSeries,
    MonomialParam,
    XPoly,
    inv_qpoch,
    mono,
    pochhammer,
    qbinomial,
    qpoch,
    render_series,
    series_invert,
)

__version__ = "0.1.0"
