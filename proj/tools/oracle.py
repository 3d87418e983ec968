#!/usr/bin/env python3
"""Independent numerical oracle for the values frozen into the C++ test suite.

Everything here is computed from first principles with numpy only, so the
C++ library under test shares no code with it.  Run from anywhere:

    python3 tools/oracle.py
"""
import itertools
import numpy as np

I2 = np.eye(2, dtype=complex)
S1 = np.array([[0, 1], [1, 0]], dtype=complex)
S2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
S3 = np.diag([1.0, -1.0]).astype(complex)
AL = np.array([[0, 1], [0, 0]], dtype=complex)   # two-level annihilator
ALD = AL.conj().T


def dag(a):
    return a.conj().T


def comm(a, b):
    return a @ b - b @ a


def acomm(a, b):
    return a @ b + b @ a


def sharp(a, eta):
    return np.linalg.inv(eta) @ dag(a) @ eta


def fro(a):
    return float(np.linalg.norm(a))


def section(title):
    print("\n=== " + title + " ===")


# ---------------------------------------------------------------- species
section("two-level species and the corrected commutation form")
for name, c, eta, eps in [
    ("fermion", AL, I2, +1),
    ("abnormal", 1j * AL, S3, -1),
]:
    cs = sharp(c, eta)
    n = eps * cs @ c
    print(f"{name}: ||c^2||={fro(c @ c):.3e}  ||{{c,c#}}-eps||={fro(acomm(c, cs) - eps * I2):.3e}")
    print(f"  [c,c#] = {np.round(comm(c, cs).real, 12).tolist()}")
    print(f"  eps*(1-2n) = {np.round((eps * (I2 - 2 * n)).real, 12).tolist()}")
    print(f"  printed form 1-2*eps*n = {np.round((I2 - 2 * eps * n).real, 12).tolist()}")
    print(f"  ||[c,c#] - eps(1-2n)|| = {fro(comm(c, cs) - eps * (I2 - 2 * n)):.3e}")
    print(f"  ||[c,c#] - (1-2 eps n)|| = {fro(comm(c, cs) - (I2 - 2 * eps * n)):.3e}")

# phermion via eta^{1/2} similarity for eta = diag(4,1) and [[2,1],[1,2]]
for eta in [np.diag([4.0, 1.0]).astype(complex), np.array([[2, 1], [1, 2]], dtype=complex)]:
    w, v = np.linalg.eigh(eta)
    rt = v @ np.diag(np.sqrt(w)) @ dag(v)
    irt = np.linalg.inv(rt)
    c = irt @ AL @ rt
    cs = sharp(c, eta)
    n = cs @ c
    print(f"eta={np.round(eta.real,6).tolist()}: ||c^2||={fro(c@c):.3e} "
          f"||{{c,c#}}-1||={fro(acomm(c,cs)-I2):.3e} ||n#-n||={fro(sharp(n,eta)-n):.3e} "
          f"||[c,n]-c||={fro(comm(c,n)-c):.3e} ||[c,c#]-(1-2n)||={fro(comm(c,cs)-(I2-2*n)):.3e}")

# ------------------------------------------------------------- obstruction
section("indefinite-metric obstruction, sigma = [[s,u],[v,-s]], s = i sqrt(uv)")
for u, v in [(2, 1), (1, 1), (np.exp(0.7j), np.exp(-0.7j)), (0.3 - 2j, 1.1 + 0.2j)]:
    s = 1j * np.sqrt(complex(u * v))
    sig = np.array([[s, u], [v, -s]], dtype=complex)
    ac = acomm(sig, S3 @ dag(sig) @ S3)
    expect = -((abs(u) - abs(v)) ** 2) * I2
    print(f"u={u}, v={v}: ||sigma^2||={fro(sig @ sig):.3e}  "
          f"anticomm diag={np.round(ac[0,0].real,12)}  expected={np.round(expect[0,0].real,12)}  "
          f"||diff||={fro(ac - expect):.3e}")

# --------------------------------------------------------- classifyMetrics
section("metric solution spaces over Hermitian eta: eta c* = c^dag eta")


def herm_basis(d):
    basis = []
    for i in range(d):
        e = np.zeros((d, d), dtype=complex)
        e[i, i] = 1
        basis.append(e)
    for i in range(d):
        for j in range(i + 1, d):
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = e[j, i] = 1
            basis.append(e)
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = -1j
            e[j, i] = 1j
            basis.append(e)
    return basis


def classify(c, cstar):
    d = c.shape[0]
    basis = herm_basis(d)
    cols = []
    for e in basis:
        m = e @ cstar - dag(c) @ e
        cols.append(np.concatenate([m.real.flatten(), m.imag.flatten()]))
    a = np.array(cols).T
    _, sv, vt = np.linalg.svd(a)
    null = [vt[k] for k in range(len(basis)) if (k >= len(sv) or sv[k] < 1e-10)]
    sols = []
    for coeffs in null:
        m = sum(coef * e for coef, e in zip(coeffs, basis))
        w = np.linalg.eigvalsh(m)
        thr = 1e-8 * max(abs(w)) if max(abs(w)) > 0 else 1e-12
        inertia = (int((w > thr).sum()), int((w < -thr).sum()), int((abs(w) <= thr).sum()))
        sols.append((m, inertia))
    return sols


for label, c, cstar in [
    ("(alpha, alpha^dag)", AL, ALD),
    ("(i alpha, i alpha^dag)", 1j * AL, 1j * ALD),
    ("(alpha, alpha)", AL, AL),
]:
    sols = classify(c, cstar)
    print(f"{label}: solution dim = {len(sols)}")
    for m, inertia in sols:
        print(f"  basis elem (re) = {np.round(m.real, 6).tolist()} inertia={inertia}")

# random similarity images of the fermion pair -> definite 1-dim span
rng = np.random.default_rng(0xC0FFEE)
ok = True
for _ in range(50):
    s = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    while abs(np.linalg.det(s)) < 0.3:
        s = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    si = np.linalg.inv(s)
    sols = classify(si @ AL @ s, si @ ALD @ s)
    ok &= len(sols) == 1 and (sols[0][1][0] == 2 or sols[0][1][1] == 2)
print(f"50 random conjugated fermion pairs -> 1-dim definite span: {ok}")

# ------------------------------------------------------------- oscillators
section("boson-fermion E=1 truncation=8")


def boson(t):
    a = np.zeros((t + 1, t + 1), dtype=complex)
    for k in range(1, t + 1):
        a[k - 1, k] = np.sqrt(k)
    return a


def build(kind, E, t):
    a = boson(t)
    nb = dag(a) @ a
    if kind == "bf":
        c2, eta2 = AL, I2
    else:
        c2, eta2 = 1j * AL, S3
    n2 = (dag(c2) if kind == "bf" else sharp(c2, eta2)) @ c2
    if kind == "bap":
        n2 = -sharp(c2, eta2) @ c2
    H = E * (np.kron(nb, I2) + np.kron(np.eye(t + 1), n2))
    Q = np.sqrt(2 * abs(E)) * np.kron(dag(a), c2)
    eta = np.kron(np.eye(t + 1), eta2)
    tau = np.kron(np.eye(t + 1), I2 - 2 * n2)
    return H, Q, eta, tau, a


H, Q, eta, tau, a = build("bf", 1.0, 8)
evals = np.round(np.diag(H).real, 12)
vals, counts = np.unique(evals, return_counts=True)
print("spectrum multiset:", {float(v): int(c) for v, c in zip(vals, counts)})
Qs = np.linalg.inv(eta) @ dag(Q) @ eta
P = np.kron(np.diag([1.0] * 8 + [0.0]), I2)
print(f"||Q^2||={fro(Q @ Q):.3e}  ||[Q,H]||={fro(comm(Q, H)):.3e}  "
      f"||P({{Q,Q#}}-2H)P||={fro(P @ (acomm(Q, Qs) - 2 * H) @ P):.3e}")
print(f"||{{tau,Q}}||={fro(acomm(tau, Q)):.3e}  ||[tau,eta]||={fro(comm(tau, eta)):.3e}")
print(f"full-space ||{{Q,Q#}}-2H|| = {fro(acomm(Q, Qs) - 2 * H):.6f}  (expected 2*E*(t+1)=18 at |t,->)")
# D block: grade + indices are even (f=0), grade - odd, boson-major ordering
plus = [2 * n for n in range(9)]
minus = [2 * n + 1 for n in range(9)]
B = Q[np.ix_(plus, minus)]          # H_- -> H_+ block
print(f"Q upper(+<-−) block == sqrt(2E) a^dag: {fro(B - np.sqrt(2) * dag(a)):.3e}")
print(f"Q lower(−<-+) block norm: {fro(Q[np.ix_(minus, plus)]):.3e}")

section("boson-abnormal-phermion E=-1 truncation=8")
H, Q, eta, tau, a = build("bap", -1.0, 8)
print(f"||eta - tau|| = {fro(eta - tau):.3e}")
evals = np.round(np.diag(H).real, 12)
vals, counts = np.unique(evals, return_counts=True)
print("spectrum multiset:", {float(v): int(c) for v, c in zip(vals, counts)})
Qs = np.linalg.inv(eta) @ dag(Q) @ eta
print(f"||Q^2||={fro(Q@Q):.3e} ||[Q,H]||={fro(comm(Q,H)):.3e} "
      f"||P({{Q,Q#}}-2H)P||={fro(P@(acomm(Q,Qs)-2*H)@P):.3e}")
# pair sign relation: source |n-1,-> (index 2(n-1)+1), partner Q|n-1,->
for n in [1, 4, 8]:
    src = np.zeros(18, dtype=complex)
    src[2 * (n - 1) + 1] = 1
    w = Q @ src
    nrm_src = (dag(src.reshape(-1, 1)) @ eta @ src.reshape(-1, 1))[0, 0].real
    nrm_w = (dag(w.reshape(-1, 1)) @ eta @ w.reshape(-1, 1))[0, 0].real
    print(f"E_n={-n}: <<-|->>={nrm_src:+.1f}, <<Q-|Q->>={nrm_w:+.1f} (=2 E_n <<-|->> = {2 * (-n) * nrm_src:+.1f})")

# Q -> Q^dag replacement still satisfies the algebra (ledger item)
Qd = dag(Q)
Qds = np.linalg.inv(eta) @ dag(Qd) @ eta
print(f"Q->Q^dag: ||(Q^d)#+Q||={fro(Qds + Q):.3e}  ||P({{Qd,Qd#}}-2H)P||={fro(P @ (acomm(Qd, Qds) - 2 * H) @ P):.3e}")
# genuinely broken supercharge
Qb = np.sqrt(2) * np.kron(dag(a), dag(1j * AL))
Qbs = np.linalg.inv(eta) @ dag(Qb) @ eta
print(f"Q_bad=a^dag x c2^dag: ||Qb^2||={fro(Qb@Qb):.3e} ||{{tau,Qb}}||={fro(acomm(tau,Qb)):.3e} "
      f"||P({{Qb,Qb#}}-2H)P||={fro(P@(acomm(Qb,Qbs)-2*H)@P):.3f}")

# --------------------------------------------------------- multi-phermion
section("multi-phermion (Jordan-Wigner with sigma3 strings)")


def site_ops(ell):
    ops = []
    for i in range(1, ell + 1):
        m = np.array([[1.0]], dtype=complex)
        for k in range(1, ell + 1):
            f = S3 if k < i else (1j * AL if k == i else I2)
            m = np.kron(m, f)
        ops.append(m)
    return ops


def eta_multi(ell):
    m = np.array([[1.0]], dtype=complex)
    for _ in range(ell):
        m = np.kron(m, S3)
    return m


for ell in [2, 3, 4]:
    cs = site_ops(ell)
    eta = eta_multi(ell)
    css = [sharp(c, eta) for c in cs]
    worst = 0.0
    for i in range(ell):
        for j in range(ell):
            worst = max(worst, fro(acomm(cs[i], cs[j])))
            want = -np.eye(2 ** ell) if i == j else 0 * eta
            worst = max(worst, fro(acomm(cs[i], css[j]) - want))
    print(f"ell={ell}: max relation residual = {worst:.3e}")
    # occupation basis: apply creators with site-ell factor acting first
    signs = []
    for occ in itertools.product([0, 1], repeat=ell):
        v = np.zeros(2 ** ell, dtype=complex)
        v[0] = 1
        for i in reversed(range(ell)):
            if occ[i]:
                v = css[i] @ v
        signs.append(int(np.round((dag(v.reshape(-1, 1)) @ eta @ v.reshape(-1, 1))[0, 0].real)))
    par = [(-1) ** sum(occ) for occ in itertools.product([0, 1], repeat=ell)]
    print(f"  eta-norm == (-1)^sum(nu) for all 2^ell states: {signs == par}")

# phys-2 closed form vs brute force
def phys2_check(ell):
    cs = site_ops(ell)
    eta = eta_multi(ell)
    css = [sharp(c, eta) for c in cs]
    dim = 2 ** ell
    beta = {(i, j): css[i] @ cs[j] for i in range(ell) for j in range(ell)}
    pairs = [(i, j) for i in range(ell) for j in range(i + 1, ell)]
    worst = 0.0
    for (i, j) in pairs:
        for (k, l) in pairs:
            brute = comm(cs[i] @ cs[j], css[l] @ css[k])
            d = lambda x, y: 1.0 if x == y else 0.0
            closed = (d(i, k) * d(j, l) - d(i, j) * d(j, k)) * np.eye(dim) \
                + d(i, k) * beta[(l, j)] + d(j, l) * beta[(k, i)] \
                - d(j, k) * beta[(l, i)] - d(i, l) * beta[(k, j)]
            worst = max(worst, fro(brute - closed))
    return worst


for ell in [2, 3, 4]:
    print(f"ell={ell}: max ||[a_ij, a+_kl] - printed closed form|| = {phys2_check(ell):.3e}")

# frozen example: ell=3, (i,j)=(k,l)=(1,2) [1-based]
ell = 3
cs = site_ops(ell)
eta = eta_multi(ell)
css = [sharp(c, eta) for c in cs]
lhs = comm(cs[0] @ cs[1], css[1] @ css[0])
rhs = np.eye(8) + css[1] @ cs[1] + css[0] @ cs[0]
print(f"ell=3 tuple (1,2),(1,2): ||brute - (I + b22 + b11)|| = {fro(lhs - rhs):.3e}")
ntot = sum(-sharp(c, eta) @ c for c in cs)
print(f"ell=3 max ||[beta_ij, N_tot]|| = "
      f"{max(fro(comm(css[i] @ cs[j], ntot)) for i in range(3) for j in range(3)):.3e}")

# ------------------------------------------------------------------- lie
section("J-triple brackets and Casimir witness")
for name, c, eta, eps in [("fermion", AL, I2, +1), ("abnormal", 1j * AL, S3, -1)]:
    cshp = sharp(c, eta)
    n = eps * cshp @ c
    J = [(c + cshp) / 2, (c - cshp) / (2j), -n + I2 / 2]
    delta = [1, 1, 1] if eps == 1 else [1, 1, -1]
    lc = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 0, 2): -1, (2, 1, 0): -1, (0, 2, 1): -1}
    worst = 0.0
    for i in range(3):
        for j in range(3):
            want = sum(1j * delta[k] * lc.get((i, j, k), 0) * J[k] for k in range(3))
            worst = max(worst, fro(comm(J[i], J[j]) - want))
    cas = J[0] @ J[0] + J[1] @ J[1] + delta[2] * (J[2] @ J[2])
    print(f"{name}: max bracket residual={worst:.3e}  casimir={np.round(cas[0,0].real,12)}*I "
          f"(off-identity {fro(cas - cas[0,0]*I2):.3e})")
    print(f"  J_i = J_i# residuals: {[round(fro(sharp(Ji, eta) - Ji), 14) for Ji in J]}")
    print(f"  J_i = J_i^dag residuals: {[round(fro(dag(Ji) - Ji), 14) for Ji in J]}")

# ---------------------------------------------------------------- misc
section("misc frozen values")
eta = np.array([[2, 1], [1, 2]], dtype=complex)
w, v = np.linalg.eigh(eta)
rt = v @ np.diag(np.sqrt(w)) @ dag(v)
print("sqrt([[2,1],[1,2]]) =", np.round(rt.real, 12).tolist())
print("||sqrt^2 - eta|| =", f"{fro(rt @ rt - eta):.3e}")
t = 6
a = boson(t)
print(f"boson t=6: ||[a,a^dag]-I||_F = {fro(comm(a, dag(a)) - np.eye(t+1)):.6f} (expected t+1 = 7)")
a4 = boson(4)
print(f"boson t=4: [a,a^dag] levels 0..3 == I: "
      f"{fro((comm(a4, dag(a4)) - np.eye(5))[:4, :4]):.3e}")
