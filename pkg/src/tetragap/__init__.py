# Exact construction of tetrahedra and verification of the Grace-Danielsson gap
from .scalar import QuadExt, parse_scalar, format_scalar, exact_sqrt, sign
from .base import BaseConfig, Point2, area_set, big_A_B, critical_inradius_sq
from .construct import Point3, Tetrahedron, build_tetrahedron, apex, tangent_points
from .metrics import metrics, gd_verdict
from .certificate import GapCertificate, certificate, u_pair, v_pair, expanded_v
from .errors import (TetragapError, FieldError, LiteralError, PreconditionError,
                     DegeneracyError, VerificationError)
