"""Independent reference values for the element and material tests.

Re-implements the element functional from scratch with jax (float64) and
writes value, gradient and Hessian for a handful of fixed random elements to
element_oracles.inc. The gradient and Hessian come from automatic
differentiation, the "exact" values (total, and the polynomial coupling
integral alone) from a 40x40 collapsed Gauss-Legendre rule.

Usage: python3 gen_oracles.py > element_oracles.inc
"""

import numpy as np
import jax
import jax.numpy as jnp

jax.config.update("jax_enable_x64", True)

P1_PAIRS = [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]
EDGES = [(0, 1), (1, 2), (2, 0)]

# 6-point degree-4 rule (Dunavant).
A1, W1 = 0.4459484909159648863183293, 0.2233815896780114656950070
A2, W2 = 0.09157621350977074345957146, 0.1099517436553218676383263


def s21(a, w):
    b = 1.0 - 2.0 * a
    return [((a, a, b), w), ((a, b, a), w), ((b, a, a), w)]


DEG4 = s21(A1, W1) + s21(A2, W2)


def collapsed_gauss(n):
    x, w = np.polynomial.legendre.leggauss(n)
    x = 0.5 * (x + 1.0)
    w = 0.5 * w
    pts = []
    for xi, wi in zip(x, w):
        for yj, wj in zip(x, w):
            l1 = xi
            l2 = (1.0 - xi) * yj
            pts.append(((1.0 - l1 - l2, l1, l2), 2.0 * wi * wj * (1.0 - xi)))
    return pts


EXACT = collapsed_gauss(40)


def grad_lambda(P):
    M = np.array([[1.0, 1.0, 1.0], [P[0][0], P[1][0], P[2][0]], [P[0][1], P[1][1], P[2][1]]])
    Minv = np.linalg.inv(M)
    # λ = Minv @ (1, x, y)
    return [Minv[i, 1:] for i in range(3)], 0.5 * abs(np.linalg.det(M))


def functional(P, mu, kappa, rule, coupling_only=False):
    dl, area = grad_lambda(P)
    dl = [jnp.array(g) for g in dl]

    def f(s):
        th1c, th2c = s[0:6], s[6:12]
        t1c, t2c = s[12:15], s[15:18]
        ph1, ph2 = s[18:21], s[21:24]
        dphi1 = sum(ph1[a] * dl[a] for a in range(3))
        dphi2 = sum(ph2[a] * dl[a] for a in range(3))
        total = 0.0
        for lam, w in rule:
            p1 = [lam[i] * dl[j] for (i, j) in P1_PAIRS]
            wh = [lam[i] * dl[j] - lam[j] * dl[i] for (i, j) in EDGES]
            th1 = sum(th1c[k] * p1[k] for k in range(6))
            th2 = sum(th2c[k] * p1[k] for k in range(6))
            t1 = sum(t1c[k] * wh[k] for k in range(3))
            t2 = sum(t2c[k] * wh[k] for k in range(3))
            wedge = lambda a, b: a[0] * b[1] - a[1] * b[0]
            J = wedge(th1, th2)
            I1 = th1 @ th1 + th2 @ th2
            W = 0.5 * mu * (I1 - 2.0) - mu * jnp.log(J) + 0.5 * kappa * jnp.log(J) ** 2
            eta = [th1 - dphi1, th2 - dphi2]
            C = sum(t1[j] * wedge(th2, eta[j]) + t2[j] * wedge(th1, eta[j]) for j in range(2))
            total = total + w * (-C if coupling_only else W - C)
        return area * total

    return f


def local_state(P, F, rng, theta_noise, t_scale, phi_noise):
    """θ near rows of F, φ near F·X, random t."""
    s = np.zeros(24)
    phi = [F @ np.array(P[a]) for a in range(3)]
    for comp in range(2):
        vals = [phi[a][comp] + phi_noise * rng.standard_normal() for a in range(3)]
        s[18 + 3 * comp:21 + 3 * comp] = vals
        # coefficient of λⁱdλʲ reproducing dφ is φ(j) - φ(i) for the exact affine field
        for k, (i, j) in enumerate(P1_PAIRS):
            exact = F[comp] @ (np.array(P[j]) - np.array(P[i]))
            s[6 * comp + k] = exact + theta_noise * rng.standard_normal()
    s[12:18] = t_scale * rng.standard_normal(6)
    return s


def random_triangle(rng):
    while True:
        P = rng.uniform(-1.0, 2.0, size=(3, 2))
        M = np.array([[1, 1, 1], P[:, 0], P[:, 1]])
        d = np.linalg.det(M)
        if d < 0:
            P[[1, 2]] = P[[2, 1]]
            d = -d
        if d > 0.3:
            return [tuple(p) for p in P]


def fmt(x):
    return f"{x:.17e}"


def main():
    rng = np.random.default_rng(20240611)
    cases = []
    params = [(1.0, 10.0), (80.194, 4000.0), (10.0, 1000.0), (2.0, 0.5), (1.0, 1.0)]
    for c, (mu, kappa) in enumerate(params):
        P = random_triangle(rng)
        F = np.array([[1.0, 0.0], [0.0, 1.0]]) + 0.2 * rng.standard_normal((2, 2))
        if np.linalg.det(F) < 0.5:
            F = np.eye(2) + 0.05 * rng.standard_normal((2, 2))
        s = local_state(P, F, rng, 0.05, 0.7, 0.05)
        f4 = functional(P, mu, kappa, DEG4)
        fx = functional(P, mu, kappa, EXACT)
        x = jnp.array(s)
        fc = functional(P, mu, kappa, EXACT, coupling_only=True)
        cases.append(dict(P=P, mu=mu, kappa=kappa, s=s, value4=float(f4(x)), exact=float(fx(x)),
                          coupling=float(-fc(x)),
                          grad=np.asarray(jax.grad(f4)(x)), hess=np.asarray(jax.hessian(f4)(x))))

    out = []
    out.append("// Generated by gen_oracles.py; do not edit.")
    out.append("struct ElementOracle {")
    out.append("  double vertices[3][2];")
    out.append("  double mu, kappa;")
    out.append("  double state[24];")
    out.append("  double value_deg4;")
    out.append("  double value_exact;")
    out.append("  double coupling_exact;")
    out.append("  double gradient[24];")
    out.append("  double hessian[24 * 24];")
    out.append("};")
    out.append(f"inline const ElementOracle kElementOracles[{len(cases)}] = {{")
    for c in cases:
        out.append("  {")
        out.append("    {" + ", ".join("{" + fmt(p[0]) + ", " + fmt(p[1]) + "}" for p in c["P"]) + "},")
        out.append(f"    {fmt(c['mu'])}, {fmt(c['kappa'])},")
        out.append("    {" + ", ".join(fmt(v) for v in c["s"]) + "},")
        out.append(f"    {fmt(c['value4'])},")
        out.append(f"    {fmt(c['exact'])},")
        out.append(f"    {fmt(c['coupling'])},")
        out.append("    {" + ", ".join(fmt(v) for v in c["grad"]) + "},")
        out.append("    {" + ", ".join(fmt(v) for v in c["hess"].ravel()) + "},")
        out.append("  },")
    out.append("};")
    print("\n".join(out))


if __name__ == "__main__":
    main()
