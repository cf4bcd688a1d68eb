"""Foliations and pencils used across the test suite."""
from folint.poly import parse_poly as P
from folint.polyform import saturate

EX1 = saturate(
    P("2*X1*X2^5"),
    P("-7*X1^5*X2-3*X0*X2^5+X1*X2^5"),
    P("7*X1^6+X0*X1*X2^4-X1^2*X2^4"),
)
EX1_F = P("X1^3*X2^7")
EX1_G = P("X1^10-2*X0*X1^5*X2^4+2*X1^6*X2^4+X0^2*X2^8-2*X0*X1*X2^8+X1^2*X2^8")

EX2 = saturate(
    P("3*X0^2*X2^3"),
    P("-5*X1^4*X2"),
    P("5*X1^5-3*X0^3*X2^2"),
)
EX2_F = P("X1^5-X0^3*X2^2")
EX2_G = P("X2^5")

# the printed C has X0 where X2 belongs in one term; this is the Euler-consistent form
EX3 = saturate(
    P("8*X0^4*X1^2 + 10*X0*X1^5 + 2*X0^5*X2 - 4*X0^2*X1^3*X2 - 4*X0^3*X1*X2^2 - 4*X1^4*X2^2 + 2*X0*X1^2*X2^3"),
    P("-8*X0^5*X1 - 10*X0^2*X1^4 + 10*X0^3*X1^2*X2 + 5*X1^5*X2 - X0^4*X2^2 - 2*X0*X1^3*X2^2 + 2*X0^2*X1*X2^3 - X1^2*X2^4"),
    P("-2*X0^6 - 6*X0^3*X1^3 - 5*X1^6 + 5*X0^4*X1*X2 + 6*X0*X1^4*X2 - 4*X0^2*X1^2*X2^2 + X1^3*X2^3"),
)
EX3_F1 = P("X1*X2-X0^2")
EX3_F2 = P("2*X0^3*X1^2 + X1^5 + X0^4*X2 - 2*X0*X1^3*X2 - 2*X0^2*X1*X2^2 + X1^2*X2^3")

EX4 = saturate(
    P("3*X0^2*X2^3-X1^2*X2^3"),
    P("-5*X1^4*X2+X0*X1*X2^3"),
    P("5*X1^5-3*X0^3*X2^2"),
)
