"""Cases with nonzero H^2 in the classification of one-dimensional extensions.

For each case: the action scalars, a basis of H^2 as product lists, the
classified algebras it should produce, and explicit witnesses. A witness is
``(family, {param: expr}, lam_expr)``; the expressions may use ``d1, d2``,
the coordinates of the element in the listed basis.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ThmCase:
    algebra: str
    case: str
    action: tuple
    basis: tuple
    targets: tuple
    witnesses: tuple
    tag: str
    swap_of: str | None = None


def _c(alg, case, action, basis, targets, witnesses, tag, swap_of=None):
    return ThmCase(alg, case, tuple(action), tuple(basis), tuple(targets), tuple(witnesses), tag, swap_of)


_PAIR1 = ("[e1,x1]=e4; [x1,e1]=-e4", "[e1,x2]=e4; [x2,e1]=-e4")

THEOREM_CASES = (
    _c("H", "I", (0, 1, 0, 0), ["[x2,e1]=e4"], ["H_hat_1"], [("H_phi1", {"a1": "1/d1"}, "1")], "thmH"),
    _c("H", "II", (0, 0, 0, 1), ["[x1,e2]=e4"], ["H_hat_1"], [("H_phi2", {}, "1/d1")], "thmH", "I"),
    _c("H", "III", (0, 2, 0, 0), ["[e1,e1]=e4"], ["H_hat_2"], [("H_phi1", {}, "1/d1")], "thmH"),
    _c("H", "IV", (0, 0, 0, 2), ["[e2,e2]=e4"], ["H_hat_2"], [("H_phi2", {}, "1/d1")], "thmH", "III"),
    _c("H", "V", (0, 1, 0, 1), ["[e1,e2]=e4; [e2,e1]=e4; [x1,e3]=-e4; [x2,e3]=e4"], ["H_hat_3"],
       [("H_phi1", {}, "1/d1")], "thmH"),
    _c("H", "VII", (-1, 1, 0, 0), _PAIR1, ["H_hat_4", "H_hat_5"],
       [("H_phi1", {"a1": "1/d2"}, "1"), ("H_phi1", {"a1": "1/d1"}, "1")], "thmH"),
    _c("H", "VIII", (0, 0, -1, 1), ["[e2,x1]=e4; [x1,e2]=-e4", "[e2,x2]=e4; [x2,e2]=-e4"], ["H_hat_4", "H_hat_5"],
       [("H_phi2", {"a1": "1/d1"}, "1"), ("H_phi2", {"a1": "1/d2"}, "1")], "thmH", "VII"),
    _c("H", "IX", (-1, 1, -2, 2), ["[e2,e3]=e4; [e3,e2]=-e4"], ["H_hat_6"], [("H_phi2", {}, "1/d1")], "thmH", "X"),
    _c("H", "X", (-2, 2, -1, 1), ["[e1,e3]=e4; [e3,e1]=-e4"], ["H_hat_6"], [("H_phi1", {}, "1/d1")], "thmH"),

    _c("L1", "I", (0, 1, 0, 0), ["[x2,e1]=e4"], ["L1_hat_1"], [("L1_phi", {"a1": "1/d1"}, "1")], "thmL1"),
    _c("L1", "II", (0, 2, 0, 0), ["[e1,e1]=e4"], ["L1_hat_2"], [("L1_phi", {}, "1/d1")], "thmL1"),
    _c("L1", "III", (0, 2, 0, 1), ["[e3,e1]=e4"], ["L1_hat_3"], [("L1_phi", {}, "1/d1")], "thmL1"),
    _c("L1", "IV", (0, 0, 0, 1), ["[e2,x1]=e4", "[e2,x2]=e4"], ["L1_hat_4", "L1_hat_5"],
       [("L1_phi", {"a2": "1/d2"}, "1"), ("L1_phi", {"a2": "1/d1"}, "1")], "thmL1"),
    _c("L1", "VI", (-1, 1, 0, 0), _PAIR1, ["L1_hat_6", "L1_hat_7"],
       [("L1_phi", {"a1": "1/d2"}, "1"), ("L1_phi", {"a1": "1/d1"}, "1")], "thmL1"),

    _c("L2", "1", (0, 1, 0, 0), ["[x2,e1]=e4"], ["L2_hat_1"], [("L2_phi", {"a1": "1/d1"}, "1")], "thmL2"),
    _c("L2", "2", (0, 3, 0, 0), ["[e3,e1]=e4"], ["L2_hat_2"], [("L2_phi", {}, "1/d1")], "thmL2"),
    _c("L2", "3", (0, 0, 0, 1), ["[e2,x1]=e4", "[e2,x2]=e4"], ["L2_hat_3", "L2_hat_4"],
       [("L2_phi", {"a2": "1/d2"}, "1"), ("L2_phi", {"a2": "1/d1"}, "1")], "thmL2"),
    _c("L2", "4", (0, 1, 0, 1), ["[e2,e1]=e4"], ["L2_hat_5"], [("L2_phi", {}, "1/d1")], "thmL2"),
    _c("L2", "6", (-1, 1, 0, 0), _PAIR1, ["L2_hat_6", "L2_hat_7"],
       [("L2_phi", {"a1": "1/d2"}, "1"), ("L2_phi", {"a1": "1/d1"}, "1")], "thmL2"),

    _c("L3", "1", (0, 1, 0, 0), ["[x2,e1]=e4"], ["L3_hat_1"], [("L3_phi", {"a1": "1/d1"}, "1")], "thmL3"),
    _c("L3", "2", (0, 3, 0, 0), ["[e3,e1]=e4"], ["L3_hat_2"], [("L3_phi", {}, "1/d1")], "thmL3"),
    _c("L3", "3", (0, 0, 0, 1), ["[x1,e2]=e4"], ["L3_hat_3"], [("L3_phi", {"a2": "1/d1"}, "1")], "thmL3"),
    _c("L3", "4", (0, 0, 0, 2), ["[e2,e2]=e4"], ["L3_hat_4"], [("L3_phi", {}, "1/d1")], "thmL3"),
    _c("L3", "6", (-1, 1, 0, 0), _PAIR1, ["L3_hat_5", "L3_hat_6"],
       [("L3_phi", {"a1": "1/d2"}, "1"), ("L3_phi", {"a1": "1/d1"}, "1")], "thmL3"),
    _c("L3", "7", (0, 0, -1, 1), ["[e2,x1]=e4; [x1,e2]=-e4", "[e2,x2]=e4; [x2,e2]=-e4"], ["L3_hat_7", "L3_hat_8"],
       [("L3_phi", {"a2": "1/d2"}, "1"), ("L3_phi", {"a2": "1/d1"}, "1")], "thmL3"),
)

# the classified algebras each theorem must produce
THEOREM_TARGETS = {
    "H": ("H_hat_1", "H_hat_2", "H_hat_3", "H_hat_4", "H_hat_5", "H_hat_6"),
    "L1": tuple(f"L1_hat_{i}" for i in range(1, 8)),
    "L2": tuple(f"L2_hat_{i}" for i in range(1, 8)),
    "L3": tuple(f"L3_hat_{i}" for i in range(1, 9)),
}
