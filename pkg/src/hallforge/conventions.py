"""Fixed conventions, centralized so every consumer states the same thing.

All commutator-sign-dependent expected values in the tests trace back to
these constants, which are validated against the independent matrix oracle.
"""

COMMUTATOR_WORD = "[x,y] = x^-1 y^-1 x y"
BRACKET_IMAGE = "node (l, r) maps to [image(l), image(r)]"
GENERATOR_EMBEDDING = "x_j maps to 1 + x_j"
HALL_BASIC_RULE = "[u,v] basic iff u > v and (u = [a,b] implies b <= v)"
HALL_ORDER = "(weight, discovery index), u-major enumeration inside each weight"

# Leading coefficient of commutator(u_1j, u_1l) for j < l on the weight-2
# basic commutator [x_l, x_j]. With [x,y] = x^-1 y^-1 x y this is -1.
WEIGHT2_LOW_HIGH_SIGN = -1


def convention_header(rank: int, nclass: int) -> dict:
    return {
        "rank": rank,
        "class": nclass,
        "commutator": COMMUTATOR_WORD,
        "bracket_image": BRACKET_IMAGE,
        "generator_embedding": GENERATOR_EMBEDDING,
        "hall_basic_rule": HALL_BASIC_RULE,
        "hall_order": HALL_ORDER,
        "weight2_low_high_sign": WEIGHT2_LOW_HIGH_SIGN,
    }
