# tetragap - exact tetrahedron gap verification
from .tetragap import build_tetrahedron, certificate, gd_verdict, metrics
