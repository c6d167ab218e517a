from closure.newton import (
    ClosureCheck,
    NewtonMembershipCertificate,
    integral_closure,
    is_integrally_closed,
    np_contains,
    power_is_integrally_closed,
)
from closure.normality import NormalityReport, is_normal

__all__ = [
    "ClosureCheck",
    "NewtonMembershipCertificate",
    "NormalityReport",
    "integral_closure",
    "is_integrally_closed",
    "is_normal",
    "np_contains",
    "power_is_integrally_closed",
]
