import sympy as sp

from leafdist.resources.resource import Resource

i, n = sp.symbols("i n", integer=True)


class HypergeometricCertificate(Resource):
    """Polynomials a, b, c, x in i (with coefficients in n) for a(i) x(i+1) - b(i-1) x(i) = c(i)."""

    def __init__(self, a, b, c, x):
        self.a = sp.sympify(a)
        self.b = sp.sympify(b)
        self.c = sp.sympify(c)
        self.x = sp.sympify(x)

    def gosper_residual(self) -> sp.Expr:
        """a(i) x(i+1) - b(i-1) x(i) - c(i), expanded; zero iff the certificate is valid."""
        return sp.expand(self.a * self.x.subs(i, i + 1) - self.b.subs(i, i - 1) * self.x - self.c)

    def substitute(self, n_value: int) -> "HypergeometricCertificate":
        return HypergeometricCertificate(*(p.subs(n, n_value) for p in (self.a, self.b, self.c, self.x)))

    def replace(self, **polynomials) -> "HypergeometricCertificate":
        current = {"a": self.a, "b": self.b, "c": self.c, "x": self.x}
        current.update(polynomials)
        return HypergeometricCertificate(**current)

    def as_dict(self):
        return {name: str(getattr(self, name)) for name in ("a", "b", "c", "x")}

    def __repr__(self):
        return f"<HypergeometricCertificate[a:{self.a}, b:{self.b}, c:{self.c}, x:{self.x}]>"


LEAF_DISTANCE_CERTIFICATE = HypergeometricCertificate(a=2 * (2 + i - n), b=5 + i - 2 * n, c=i, x=1)
