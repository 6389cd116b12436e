"""
Exact determinants and Cramer solves over any scalar field.

Small fixed sizes only (2, 3, 4); the determinant of the system doubles as
the degeneracy detector, so a zero determinant returns None instead of raising.
"""
from typing import Optional, Sequence, Tuple


def det2(a, b, c, d):
    """
    |a b|
    |c d|
    """
    return a * d - b * c


def det3(m: Sequence[Sequence]):
    """Determinant of a 3x3 matrix (rule of Sarrus)."""
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def det4(m: Sequence[Sequence]):
    """Determinant of a 4x4 matrix by expansion along the first row."""
    total = 0
    for j in range(4):
        minor = [[m[i][l] for l in range(4) if l != j] for i in range(1, 4)]
        term = m[0][j] * det3(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def solve2(rows: Sequence[Sequence], rhs: Sequence) -> Optional[Tuple]:
    """Solve a 2x2 system by Cramer's rule; None if singular."""
    d = det2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    if d == 0:
        return None
    dx = det2(rhs[0], rows[0][1], rhs[1], rows[1][1])
    dy = det2(rows[0][0], rhs[0], rows[1][0], rhs[1])
    return dx / d, dy / d


def solve3(rows: Sequence[Sequence], rhs: Sequence) -> Optional[Tuple]:
    """Solve a 3x3 system by Cramer's rule; None if singular."""
    d = det3(rows)
    if d == 0:
        return None
    solution = []
    for col in range(3):
        replaced = [[rhs[i] if j == col else rows[i][j] for j in range(3)]
                    for i in range(3)]
        solution.append(det3(replaced) / d)
    return tuple(solution)
