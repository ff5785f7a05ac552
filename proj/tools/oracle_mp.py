# independent high-precision oracle: mpmath tanh-sinh, 30 digits
import mpmath as mp
mp.mp.dps = 30
E1 = mp.mpc(1, 1); E3 = mp.mpc(-1, 1.5); beta = mp.pi

def sq(w): return mp.sqrt(w)
def conj(z): return mp.conj(z)

def make(eps):
    E2 = E3 + eps
    return dict(E1=E1, E2=E2, E3=E3, m1=conj(E1), m2=conj(E2), m3=conj(E3))

def R(z, c, seg=None, pq=None):
    # seg = (s, p, q, side): z = p + s (q - p) on a cut, side +1 = left.
    # pq = (s, p, q): z on a segment, endpoint differences formed exactly.
    if seg is not None: pq = seg[:4]
    def d(e):
        if pq is not None:
            s, omt, p, q = pq
            if e == p: return s * (q - p)
            if e == q: return -omt * (q - p)
        return z - e
    def sr(a, b):
        if seg is not None:
            s, omt, p, q, side = seg
            if (p == a and q == b) or (p == b and q == a):
                lam = mp.sqrt(abs(d(a)) / abs(d(b)))
                left = -1j * lam if (p == a and q == b) else 1j * lam
                return left if side > 0 else -left
        return sq(d(a) / d(b))
    return d(c['E2']) * d(c['m1']) * d(c['m3']) * sr(c['E3'], c['E2']) * sr(c['E1'], c['m1']) * sr(c['m2'], c['m3'])

def segint(f, p, q, c, side):
    # each half from its own endpoint so that 1 - s never rounds to zero
    brk = [0, mp.mpf('1e-8'), mp.mpf('1e-6'), mp.mpf('1e-4'), mp.mpf('1e-2'), mp.mpf('0.1'), mp.mpf('0.5')]
    def g(sig, mirrored):
        s, omt = (1 - sig, sig) if mirrored else (sig, 1 - sig)
        z = q - omt * (q - p) if mirrored else p + s * (q - p)
        return f(z) / R(z, c, (s, omt, p, q, side) if side else None, (s, omt, p, q)) * (q - p)
    return mp.quad(lambda u: g(u, False), brk) + mp.quad(lambda u: g(u, True), brk)

def normalization(eps):
    c = make(eps)
    arcs = dict(a23=(c['E2'], c['E3'], 1), a12=(c['E1'], c['E2'], 0), am21=(c['m2'], c['m1'], 0), am32=(c['m3'], c['m2'], 1))
    I = {k: [segint(lambda z, n=n: z**n, p, q, c, s) for n in range(3)] for k, (p, q, s) in arcs.items()}
    A = mp.matrix([[I['a23'][0], I['am32'][0]], [I['a23'][1], I['am32'][1]]])
    B = mp.matrix([[I['a12'][0], I['am21'][0]], [I['a12'][1], I['am21'][1]]])
    sol = mp.lu_solve(A, B * mp.matrix([beta, beta]))
    M2 = sol[0] * I['a23'][2] - beta * I['a12'][2] - beta * I['am21'][2] + sol[1] * I['am32'][2]
    return sol[0], -M2 / (2j * mp.pi)

def theta_data(eps, alpha=mp.mpf('0.3')):
    c = make(eps)
    # a-cycles clockwise: +2 int on the left side; b: 2 int along E2 -> E1 (conj path for b2)
    def aper(f, j):
        p, q = (c['E2'], c['E3']) if j == 0 else (c['m3'], c['m2'])
        return 2 * segint(f, p, q, c, 1)
    def bper(f, j):
        p, q = (c['E2'], c['E1']) if j == 0 else (c['m2'], c['m1'])
        return 2 * segint(f, p, q, c, 0)
    mon = [lambda z, n=n: z**n for n in range(5)]
    Aa = [[aper(mon[l], j) for l in range(5)] for j in range(2)]
    Bb = [[bper(mon[l], j) for l in range(5)] for j in range(2)]
    At = mp.matrix([[Aa[0][0], Aa[1][0]], [Aa[0][1], Aa[1][1]]])
    C = 2j * mp.pi * At**-1
    Bm = [[sum(C[k, l] * Bb[j][l] for l in range(2)) for k in range(2)] for j in range(2)]
    # 1/w series
    roots = [c['E1'], c['E2'], c['E3'], c['m1'], c['m2'], c['m3']]
    n = 90
    u = [mp.mpc(1)] + [mp.mpc(0)] * (n - 1)
    for e in roots:
        b = [mp.mpc(1)]
        for k in range(1, n): b.append(b[-1] * (k - mp.mpf(1) / 2) / k * e)
        u = [sum(u[i] * b[m - i] for i in range(m + 1)) for m in range(n)]
    Amat = mp.matrix([[Aa[0][0], Aa[0][1]], [Aa[1][0], Aa[1][1]]])
    def fix(lead):
        rhs = mp.matrix([-sum(cf * Aa[j][p] for p, cf in lead.items()) for j in range(2)])
        c01 = mp.lu_solve(Amat, rhs)
        cf = [c01[0], c01[1], 0, 0, 0]
        for p, v in lead.items(): cf[p] = v
        return cf
    P1 = fix({3: 1, 2: -u[1]})
    c3 = -4 * u[1]; c2 = -c3 * u[1] - 4 * u[2]
    P2 = fix({4: 4, 3: c3, 2: c2})
    P3 = fix({2: 1})
    poly = lambda P: (lambda z: sum(P[k] * z**k for k in range(5)))
    z0 = c['m1'] - 8j
    def reg(P):
        f = poly(P)
        g = lambda s: f(c['m1'] + (z0 - c['m1']) * s * s) / R(c['m1'] + (z0 - c['m1']) * s * s, c, None, (s * s, 1 - s * s, c['m1'], z0)) * (z0 - c['m1']) * 2 * s
        val = mp.quad(g, [0, 0.25, 0.5, 0.75, 1])
        L = {}
        for m in range(5):
            if P[m] == 0: continue
            for k in range(n): L[m - 3 - k] = L.get(m - 3 - k, 0) + P[m] * u[k]
        for p, cf in L.items():
            val -= cf * mp.log(z0) if p == -1 else cf * z0**(p + 1) / (p + 1)
        return val
    E = -2 * reg(P1); N = 2 * reg(P2); om0 = mp.exp(-2 * reg(P3))
    V = [bper(poly(P1), j) for j in range(2)]
    W = [bper(poly(P2), j) for j in range(2)]
    r = [-bper(poly(P3), j) for j in range(2)]
    return Bm, V, W, r, E, N, om0

def show(z): return '%.15g %+.15gi' % (float(mp.re(z)), float(mp.im(z)))
for eps in ['1e-2', '1e-3']:
    e = mp.mpf(eps)
    ah, dinf = normalization(e)
    print('eps', eps, 'ahat', show(ah), 'dinf', show(dinf))
    Bm, V, W, r, E, N, om0 = theta_data(e)
    print('  B11', show(Bm[0][0]), 'B12', show(Bm[0][1]), 'B22', show(Bm[1][1]))
    print('  V1', show(V[0]), 'W1', show(W[0]), 'r1', show(r[0]))
    print('  E', show(E), 'N', show(N), 'om0', show(om0))
