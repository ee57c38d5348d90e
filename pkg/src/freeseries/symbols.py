"""The standard three-letter alphabet: a and b of degree 1, x of degree 2."""

from .freealg import Variable

a = Variable("a")
b = Variable("b")
x = Variable("x", degree=2)
