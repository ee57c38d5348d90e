"""Reference listings for the small family members, in canonical text form.

These are the hand-checkable cases: every value here was verified
independently (recurrence by hand, walk enumeration, or Dyck-word peak
reduction) before being frozen.  All listings are homogeneous of the
expected degree, which is itself asserted in the tests.
"""

D_LISTINGS = {
    1: "1",
    2: "x",
    3: "x^2 + a x b",
    4: "x^3 + a x^2 b + a x b x + x a x b + a^2 x b^2",
    5: (
        "x^4 + a x^2 b x + a x b x^2 + x a x b x + a^2 x b^2 x + x^2 a x b"
        " + a x b a x b + x a x^2 b + x a^2 x b^2 + a x^3 b + a^2 x^2 b^2"
        " + a^2 x b x b + a x a x b^2 + a^3 x b^3"
    ),
}

U_LISTINGS = {
    1: "1",
    2: "b a + x",
    3: "b a b a + x b a + b a x + a x b + x^2",
    4: (
        "b a b a b a + x b a b a + b a x b a + b a b a x + a^2 x b^2 + a x b^2 a"
        " + b a^2 x b + x^2 b a + x b a x + b a x^2 + a x^2 b + a x b x + x a x b + x^3"
    ),
}

U_X1_LISTINGS = {
    1: "1",
    2: "b a + 1",
    3: "b a b a + 2 b a + a b + 1",
    4: "b a b a b a + 3 b a b a + a b^2 a + b a^2 b + a^2 b^2 + 3 b a + 3 a b + 1",
}

T_LISTINGS = {
    1: "a_{1,1} + a_{1,2} a_{2,1}",
    2: (
        "a_{1,1}^2 + a_{1,1} a_{1,2} a_{2,1} + a_{1,2} a_{2,1} a_{1,1}"
        " + a_{1,2} a_{2,2} a_{2,1} + a_{1,2} a_{2,1} a_{1,2} a_{2,1}"
        " + a_{1,2} a_{2,3} a_{3,2} a_{2,1}"
    ),
}

#: (ab - ba)^2, expanded by hand term by term
COMMUTATOR_SQUARED = "a b a b - a b b a - b a a b + b a b a"

#: d_3 with x -> ab - ba: (ab-ba)^2 + a(ab-ba)b; the a b a b terms cancel
D3_COMMUTATOR = "a a b b - a b b a - b a a b + b a b a"

#: (1 + ab + a^2 b^2)^{-1} truncated at degree 4
GEOMETRIC_INVERSE_4 = "1 - a b - a^2 b^2 + a b a b"
