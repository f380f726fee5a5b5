"""Frozen expected values for the worked examples used across the suite."""

from fractions import Fraction as Q

# four-cell-cycle example
F3 = "xy + t*(y+x+x^2+x^2y^2) + t^3"
F3_LIFTS = {(1, 1): 0, (0, 1): 1, (1, 0): 1, (2, 0): 1, (2, 2): 1, (0, 0): 3}
F3_TERMS = "min{x+y,1+y,1+x,1+2x,1+2x+2y,3}"
F3_CELLS = {
    frozenset({(0, 0), (1, 0), (0, 1)}),
    frozenset({(1, 0), (1, 1), (0, 1)}),
    frozenset({(1, 0), (2, 0), (1, 1)}),
    frozenset({(2, 0), (2, 2), (1, 1)}),
    frozenset({(0, 1), (1, 1), (2, 2)}),
}
F3_HULL = {(0, 0), (2, 0), (2, 2), (0, 1)}
F3_VERTICES = {(2, 2), (1, 1), (0, 1), (-1, 0), (1, -2)}
F3_NEIGHBORS = ((1, 0), (2, 0), (2, 2), (0, 1))
F3_EDGE_LENGTHS = sorted([3, 2, 1, 1])
F3_JTROP = 7

# transformed example
F5 = "x^2y+xy^2+(1/t)xy+x+y"
F5_PHI = ((2, 1), (1, 1))
F5_IMAGE = "x^5y^3+x^4y^3+(1/t)x^3y^2+x^2y+xy"
F5_CELLS = {
    frozenset({(1, 0), (2, 1), (1, 1)}),
    frozenset({(2, 1), (1, 2), (1, 1)}),
    frozenset({(1, 2), (0, 1), (1, 1)}),
    frozenset({(0, 1), (1, 0), (1, 1)}),
}
F5_JTROP = 8

# triangle-cycle example
F6 = "t^(3/2)*(y+x^2+x*y^2)+x*y"
F6_LIFTS = {(0, 1): Q(3, 2), (2, 0): Q(3, 2), (1, 2): Q(3, 2), (1, 1): 0}
F6_VERTICES = {(Q(3, 2), Q(3)), (Q(3, 2), Q(-3, 2)), (Q(-3), Q(-3, 2))}
F6_JTROP = Q(27, 2)
F6_VAL = Q(-27, 2)
# numerator and denominator of j as displayed, in {exponent: coefficient} form
F6_NUM = {0: 1, Q(9, 2): 72, 9: 1728, Q(27, 2): 13824}
F6_DEN = {Q(27, 2): 1, 18: 27}

# term counts of the primitive A, B per case
AB_COUNTS = {"Ac": (1607, 2040), "Ab": (990, 1010), "Aa": (267, 312)}

# marked-point counts of the sixteen reference polygons
MARKED_COUNTS = {
    "Qa": 9, "Qb": 9, "Qc": 10, "Qca": 9, "Qcb": 8, "Qcc": 8, "Qcd": 7, "Qce": 7,
    "Qcf": 7, "Qcg": 7, "Qch": 6, "Qci": 6, "Qcj": 5, "Qck": 5, "Qcl": 5, "Qcm": 4,
}
