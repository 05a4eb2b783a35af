"""Coefficient and eigenvalue templates for the operator catalog.

Names: a1..a8 are coefficients, X1..X6 auxiliary polynomials, lam the
eigenvalue as a function of n, L an auxiliary factor of lam.
"""

TEMPLATES = {
    'EX4.1': {
        'a6': '(x - 1)^2(x + 1)^4',
        'a5': '3(x - 1)(x + 1)^3(9x - 1)',
        'a4': '60x(x + 1)^2(5x - 3)',
        'a3': '240(7x^3 + 6x^2 - 2x - 1)',
        'a2': '720x(5x + 3)',
        'a1': '360(x + 1)',
    },
    'EX4.2': {
        'a6': 'x^2',
        'a5': '-3x(m^2x - 4)',
        'a4': '-30m^2x + Ax^2 + 30',
        'a3': '5x^2m^6 - 2(Ax^2 + 30)m^2 + 8Ax',
        'a2': 'x(C - 3m^8x) + A(m^4x^2 + 12)',
        'a1': '18m^8x - 60m^6 - 8Am^4x + 24Am^2 + C(3 - m^2x)',
    },
    'EX4.3': {
        'a6': 'x^2 + 1',
        'a5': '-6m^2x(x^2 + 1)',
        'a4': '10x^4m^4 - 10m^4 + Ax^2 + A',
        'a3': '-4m^2(-10m^4 + 5m^2 + A)x(x^2 + 1)',
        'a2': 'C2x^2 + C1x + C0',
        'a1': 'D0 + D1x',
    },
    'H4': {
        'a4': '1',
        'a3': '2(m1 - 2m2^2 x)',
        'a2': '4m2^4 x^2 - 4m1 m2^2 x + A',
        'a1': '(-m1^2 + 2m2^2 + A)(m1 - 2m2^2 x)',
        'lam': '2m2^2 (m1^2 - A + 2m2^2(n-2)) n',
    },
    'H6': {
        'a6': '1',
        'a5': '-6x',
        'a4': '12x^2 - ((D)/(4)) - ((C)/(2)) - 6',
        'a3': '-8x^3 + (D + 2C + 12)x',
        'a2': '(-D - 2C)x^2 + C',
        'a1': 'Dx',
        'lam': '-n(8n^2 + 2Cn + Dn - 24n - 2C - 2D + 16)',
    },
    'H8': {
        'a8': '1',
        'a7': '-8x',
        'a6': '((-144 + D - 2F - G + 288x^2)/(12))',
        'a5': '((x(96 - D + 2F + G - 64x^2))/(2))',
        'a4': '((48 + G - 192x^2 - 4Gx^2 + 64x^4 + F(2 - 8x^2) + D(-2 + 4x^2))/(4))',
        'a3': 'Dx - ((2(D - 2F - G)x^3)/(3))',
        'a2': 'F - (2F + G)x^2',
        'a1': 'Gx',
        'lam': '((1)/(3))n(48n^3 - 2Dn^2 + 4Fn^2 + 2Gn^2 - 288n^2 + 6Dn - 18Fn - 9Gn + 528n - 4D + 14F + 10G - 288)',
    },
    'J4.b0': {
        'a4': '(1 - x^2)^2',
        'a3': '-2(-2 + a)x(-1 + x^2)',
        'a2': '-2a + a^2 + A(-1 + x^2)',
        'a1': 'a(2 - 3a + a^2 - A)x',
        'lam': 'n(-a + n - 1)(-a^2 - na + 4a + n^2 + A - n - 2)',
    },
    'J4.bne0': {
        'a4': '(1 - x^2)^2',
        'a3': '-2(b + (-2 + a)x)(-1 + x^2)',
        'a2': '((b^3 + B + 2(-1 + a)b^2x - Bx^2 + b(-2 + a + 2x^2 - 3ax^2 + a^2x^2))/(b))',
        'a1': 'B + ((aBx)/(b))',
        'lam': '(((a - n + 1)n(-bn^2 + abn + bn - ab + B))/(b))',
    },
    'J6.I.a': {
        'a6': '(1 - x^2)^3',
        'a5': '-18x(-1 + x^2)^2',
        'a4': '((-((-1 + x^2)(2C(-1 + x^2) + D(-1 + x^2) + 144(-1 + 5x^2))))/(8))',
        'a3': 'x(72 + D - 120x^2 - Dx^2 - 2C(-1 + x^2))',
        'a2': 'C + (-3C - D)x^2',
        'a1': 'Dx',
        'lam': '-((1)/(8))n(n+1)(8n^4 + 16n^3 + 2Cn^2 + Dn^2 - 56n^2 + 2Cn + Dn - 64n - 4C - 6D + 96)',
    },
    'J6.I.b': {
        'a6': '(1 - x^2)^3',
        'a5': '-3 (1 + 7x) (-1 + x^2)^2',
        'a4': '((-((-1 + x^2) (C (-1 + x^2) + D (-1 + x^2) + 72 (-1 + 2x + 7x^2))))/(4))',
        'a3': '((12 (3 + 15x - 15x^2 - 35x^3) - C (-1 - 5x + x^2 + 5x^3) - D (-1 - 5x + x^2 + 5x^3))/(2))',
        'a2': 'C + (-2C - 2D) x + (((-5C)/(3)) + ((5(-2C - 2D))/(3)) - ((2D)/(3)) ) x^2',
        'a1': 'D + 3Dx',
        'lam': '-((1)/(4))n(n+2) (4n^4 + 16n^3 + Cn^2 + Dn^2 - 28n^2 + 2Cn + 2Dn - 88n - 3C - 7D + 96)',
    },
    'J6.I.c': {
        'a6': '(1 - x^2)^3',
        'a5': '-6 (1 + 4x) (-1 + x^2)^2',
        'a4': '((-((-1 + x^2) (2C (-1 + x^2) + D (-1 + x^2) + 48 (-1 + 7x + 14x^2))))/(4))',
        'a3': '12 (3 + 6x - 21x^2 - 28x^3) - 2C (-1 - 3x + x^2 + 3x^3) - D (-1 - 3x + x^2 + 3x^3)',
        'a2': 'C + (-10C - 5D) x + (-15C - 7D) x^2',
        'a1': 'D + 2Dx',
        'lam': '-((1)/(4))n(n+3) (4n^4 + 24n^3 + 2Cn^2 + Dn^2 - 20n^2 + 6Cn + 3Dn - 168n - 8C - 6D + 160)',
    },
    'J6.I.d': {
        'a6': '(1 - x^2)^3',
        'a5': '-3 (-1 + 7x) (-1 + x^2)^2',
        'a4': '(((-1 + x^2) (C - Cx^2 + 72 (1 + 2x - 7x^2) + D (-1 + x^2)))/(4))',
        'a3': '((12 (-3 + 15x + 15x^2 - 35x^3) + C (-1 + 5x + x^2 - 5x^3) + D (1 - 5x - x^2 + 5x^3))/(2))',
        'a2': '2Dx (-1 + 2x) + C (1 + 2x - 5x^2)',
        'a1': 'D - 3Dx',
        'lam': '-((1)/(4))n(n+2) (4n^4 + 16n^3 + Cn^2 - Dn^2 - 28n^2 + 2Cn - 2Dn - 88n - 3C + 7D + 96)',
    },
    'J6.I.e': {
        'a6': '(1 - x^2)^3',
        'a5': '-24x (-1 + x^2)^2',
        'a4': '((-((-1 + x^2) (4C (-1 + x^2) + D (-1 + x^2) + 576 (-1 + 7x^2))))/(24))',
        'a3': '((x (D - Dx^2 + 96 (3 - 7x^2) - 4C (-1 + x^2)))/(2))',
        'a2': 'C - (5C + D) x^2',
        'a1': 'Dx',
        'lam': '-((1)/(24))n(n+3) (24n^4 + 144n^3 + 4Cn^2 + Dn^2 - 120n^2 + 12Cn + 3Dn - 1008n - 16C - 10D + 960)',
    },
    'J6.I.f': {
        'a6': '(1 - x^2)^3',
        'a5': '-3 (1 + 9x) (-1 + x^2)^2',
        'a4': '((-((-1 + x^2) (C (-1 + x^2) + D (-1 + x^2) + 144 (-1 + 2x + 9x^2))))/(6))',
        'a3': '((-(C (-1 - 7x + x^2 + 7x^3)) - D (-1 - 7x + x^2 + 7x^3) - 72 (-1 - 7x + 7x^2 + 21x^3))/(3))',
        'a2': '-2Dx (1 + 3x) + C (1 - 2x - 7x^2)',
        'a1': 'D + 5Dx',
        'lam': '-((1)/(6))n(n+4) (6n^4 + 48n^3 + Cn^2 + Dn^2 - 6n^2 + 4Cn + 4Dn - 408n - 5C - 11D + 360)',
    },
    'J6.I.g': {
        'a6': '(1 - x^2)^3',
        'a5': '-6 (-1 + 4x) (-1 + x^2)^2',
        'a4': '(((-1 + x^2) (48 (1 + 7x - 14x^2) - 2C (-1 + x^2) + D (-1 + x^2)))/(4))',
        'a3': '12 (-3 + 6x + 21x^2 - 28x^3) + C (-2 + 6x + 2x^2 - 6x^3) + D (1 - 3x - x^2 + 3x^3)',
        'a2': 'C + (10C - 5D) x + (-15C + 7D) x^2',
        'a1': 'D - 2Dx',
        'lam': '-((1)/(4))n(n+3) (4n^4 + 24n^3 + 2Cn^2 - Dn^2 - 20n^2 + 6Cn - 3Dn - 168n - 8C + 6D + 160)',
    },
    'J6.I.h': {
        'a6': '(1 - x^2)^3',
        'a5': '-3 (-1 + 9x) (-1 + x^2)^2',
        'a4': '(((-1 + x^2) (C - Cx^2 + D(-1 + x^2) - 144(-1 - 2x + 9x^2)))/(6))',
        'a3': '((C(-1 + 7x + x^2 - 7x^3) + D(1 - 7x - x^2 + 7x^3) - 72(1 - 7x - 7x^2 + 21x^3))/(3))',
        'a2': 'C + (2C - 2D)x + (-7C + 6D)x^2',
        'a1': 'D - 5Dx',
        'lam': '-((1)/(6))n(n+4) (6n^4 + 48n^3 + Cn^2 - Dn^2 - 6n^2 + 4Cn - 4Dn - 408n - 5C + 11D + 360)',
    },
    'J6.I.i': {
        'a6': '(1 - x^2)^3',
        'a5': '-30x (-1 + x^2)^2',
        'a4': '((-((-1 + x^2) (6C(-1 + x^2) + D(-1 + x^2) + 1440(-1 + 9x^2))))/(48))',
        'a3': '((x(720 + 6C + D - (2160 + 6C + D)x^2))/(3))',
        'a2': 'C - (7C + D)x^2',
        'a1': 'Dx',
        'lam': '-((1)/(48))n(n+5) (48n^4 + 480n^3 + 6Cn^2 + Dn^2 + 240n^2 + 30Cn + 5Dn - 4800n - 36C - 14D + 4032)',
    },
    'J6.II.a': {
        'a6': '(1 - x^2)^3',
        'a5': '3(2 + a - 4x + ax)(-1 + x^2)^2',
        'a4': '((-(-1 + x^2))/(2(-2 + a + a^2))) X4',
        'X4': '6a^4(1 + x)^2 - (-1 + x)(C + 144x + Cx) - 36a^3(-1 + x^2) + 18a^2(1 - 6x + x^2) + 12a(-5 - 4x + 13x^2)',
        'a3': '((X3)/(-2 + a + a^2))',
        'X3': 'a^5(1 + x)^3 - 2a^4(1 + x)^2(-5 + 4x) + 2(-1 + x)^2(12 + C + 24x + Cx) + 3a^3(5 - 9x - 9x^2 + 5x^3) + a^2(-22 - 48x + 42x^2 + 20x^3) + a(-28 + 60x + 60x^2 - 76x^3 - C(-1 + x)(1 + x)^2)',
        'a2': '((X2)/(2a(-2 + a + a^2)))',
        'X2': 'a^3C(1 + x)^2 + 4D(-1 + x^2) + 2a(D + C(-1 + x)^2 - Dx^2) - a^2(1 + x)(2D(-1 + x) + C(-5 + 3x))',
        'a1': '((D(2 + a + ax))/(a))',
        'lam': '-((n(-a + n - 1))/(2(a - 1)a(a + 2))) L',
        'L': '2n^2a^5 - 6na^5 + 4a^5 - 4n^3a^4 + 12n^2a^4 - 8na^4 + 2n^4a^3 - 8n^3a^3 + 4n^2a^3 + 14na^3 - 12a^3 + 2n^4a^2 + 4n^3a^2 - 22n^2a^2 - Ca^2 + 2Da^2 + Cna^2 + 8na^2 + 8a^2 - 4n^4a + 8n^3a - Cn^2a + 4n^2a + 2Da + Cna - 8na - 4D',
    },
    'J6.II.b': {
        'a6': '(1 - x^2)^3',
        'a5': '3 (4 + a - 4x + ax) (-1 + x^2)^2',
        'a4': '- (((-1 + x^2)/(a (2 - 3a + a^2))) ) X4',
        'X4': 'D - Dx^2 + 3a^5(1+x)^2 - a(-1+x)(72+C-72x+Cx) - 6a^4(-3+2x+5x^2) - 6a^2(9-38x+25x^2) + 3a^3(-13-26x+35x^2)',
        'a3': '((X3)/(a(2-3a+a^2)))',
        'X3': '-12a^5(-1+x)(1+x)^2 + a^6(1+x)^3 + 4D(2-x-2x^2+x^3) - 24a^3(4-x-8x^2+5x^3) + a^4(7-75x-27x^2+55x^3) + 2a(-1+x)(-24(-1+x)^2 - D(1+x)^2 + 2C(-2-x+x^2)) - 2a^2(C(-1+x)(1+x)^2 - 2(7+45x-75x^2+31x^3))',
        'a2': '((X2)/(a(2-3a+a^2)))',
        'X2': '-8D(-2+x) + a^2(2D-3C(-3+x))(1+x) + a^3C(1+x)^2 + 2a(3D(1+x) + C(7-4x+x^2))',
        'a1': '((D(4+a+ax))/(a))',
        'lam': '- ((n(-a+n-1))/((a-2)(a-1)a)) L',
        'L': 'n^2a^5 - 3na^5 + 2a^5 - 2n^3a^4 + 2n^2a^4 + 8na^4 - 8a^4 + n^4a^3 + 4n^3a^3 - 14n^2a^3 - na^3 + 10a^3 - 3n^4a^2 + 2n^3a^2 + 13n^2a^2 - Ca^2 + Da^2 + Cna^2 - 8na^2 - 4a^2 + 2n^4a - 4n^3a - Cn^2a - 2n^2a - 4Da + Cna + Dna + 4na - Dn^2 + 2D + Dn',
    },
    'J6.II.c': {
        'a6': '(1 - x^2)^3',
        'a5': '3 (6 + a - 4x + ax) (-1 + x^2)^2',
        'a4': '- (((-1 + x^2)/(a (2 - 3a + a^2))) ) X4',
        'X4': 'D - Dx^2 + 3a^5 (1 + x)^2 - 30a^4 (-1 + x^2) - 30a^2 (7 - 12x + 5x^2) + 15a^3 (-1 - 10x + 7x^2) + a (C - Cx^2 + 24 (8 - 9x + 3x^2))',
        'a3': '((X3)/(a (2 - 3a + a^2)))',
        'X3': 'a^6 (1 + x)^3 - 6a^5 (1 + x)^2 (-3 + 2x) + 4D (3 - x - 3x^2 + x^3) - 30a^3 (5 + 6x - 11x^2 + 4x^3) + a^4 (55 - 75x - 75x^2 + 55x^3) - 2a^2 (118 - 306x + 234x^2 - 62x^3 + C (-1 + x) (1 + x)^2) + 2a (- (D (-1 + x) (1 + x)^2) + 2C (3 - x - 3x^2 + x^3) - 12 (-13 + 16x - 9x^2 + 2x^3))',
        'a2': '((X2)/(a (2 - 3a + a^2)))',
        'X2': '-12D (-3 + x) + a^3 C (1 + x)^2 - a^2 (1 + x) (-2D + C (-13 + 3x)) + 2a (5D (1 + x) + C (17 - 6x + x^2))',
        'a1': '((D (6 + a + ax))/(a))',
        'lam': '- ((n(-a + n - 1))/((a - 2)(a - 1)a)) L',
        'L': 'n^2 a^5 - 3na^5 + 2a^5 - 2n^3 a^4 + 2n^2 a^4 + 8na^4 - 8a^4 + n^4 a^3 + 4n^3 a^3 - 14n^2 a^3 - na^3 + 10a^3 - 3n^4 a^2 + 2n^3 a^2 + 13n^2 a^2 - Ca^2 + Da^2 + Cna^2 - 8na^2 - 4a^2 + 2n^4 a - 4n^3 a - Cn^2 a - 2n^2 a - 4Da + Cna + Dna + 4na - Dn^2 + 2D + Dn',
    },
    'J6.III.a': {
        'a6': '(1 - x^2)^3',
        'a5': '3(-2 + a(-1 + x) - 4x)(-1 + x^2)^2',
        'a4': '((-(-1 + x^2))/(2(-2 + a + a^2)))X4',
        'X4': '6a^4(-1 + x)^2 + (C(-1 + x) - 144x)(1 + x) - 36a^3(-1 + x^2) + 18a^2(1 + 6x + x^2) + 12a(-5 + 4x + 13x^2)',
        'a3': '-(((X3)/(-2 + a + a^2)))',
        'X3': '-(C(-1 + x^2)(a(-1 + x) - 2(1 + x))) + (-2 - a)(1 - a)(-a^3(-1 + x)^3 + 9a^2(-1 + x)^2(1 + x)) + (-2 - a)(1 - a)(12(1 + x)^2(-1 + 2x) + a(8 + 30x - 12x^2 - 26x^3))',
        'a2': '((X2)/(2a(-2 + a + a^2)))',
        'X2': '-(a^3C(-1 + x)^2) + 4D(-1 + x^2) - 2a(1 + x)(D(-1 + x) + C(1 + x)) + a^2(-1 + x)(-2D(1 + x) + C(5 + 3x))',
        'a1': '((D(-2 + a(-1 + x)))/(a))',
        'lam': '-((n(-a + n - 1))/(2(a - 1)a(a + 2)))L',
        'L': '2n^2a^5 - 6na^5 + 4a^5 - 4n^3a^4 + 12n^2a^4 - 8na^4 + 2n^4a^3 - 8n^3a^3 + 4n^2a^3 + 14na^3 - 12a^3 + 2n^4a^2 + 4n^3a^2 - 22n^2a^2 + Ca^2 + 2Da^2 - Cna^2 + 8na^2 + 8a^2 - 4n^4a + 8n^3a + Cn^2a + 4n^2a + 2Da - Cna - 8na - 4D',
    },
    'J6.III.b': {
        'a6': '(1 - x^2)^3',
        'a5': '3 (-1 + x^2)^2 (a (-1 + x) - 4 (1 + x))',
        'a4': '- (((-1 + x^2)/(a (2 - 3a + a^2))) ) X4',
        'X4': 'D + 3a^5 (-1 + x)^2 - Dx^2 - 6a^4 (-3 - 2x + 5x^2) - 6a^2 (9 + 38x + 25x^2) + 3a^3 (-13 + 26x + 35x^2) - a (1 + x) (C (-1 + x) - 72 (1 + x))',
        'a3': '((X3)/(a (2 - 3a + a^2)))',
        'X3': 'a^6 (-1 + x)^3 - 12a^5 (-1 + x)^2 (1 + x) + 4D (-2 - x + 2x^2 + x^3) - 24a^3 (-4 - x + 8x^2 + 5x^3) + a^4 (-7 - 75x + 27x^2 + 55x^3) - 2a (1 + x) (D (-1 + x)^2 + 24(1 + x)^2 - 2C (-2 + x + x^2)) - 2a^2 (C (-1 + x)^2 (1 + x) - 2 (-7 + 45x + 75x^2 + 31x^3))',
        'a2': '((X2)/(a (2 - 3a + a^2)))',
        'X2': 'a^3 C (-1 + x)^2 + 8D (2 + x) - a^2 (-1 + x) (2D + 3C (3 + x)) + 2a (-3D (-1 + x) + C (7 + 4x + x^2))',
        'a1': '((D (-4 + a (-1 + x)))/(a))',
        'lam': '- ((n(-a + n - 1))/((a - 2)(a - 1)a)) L',
        'L': 'n^2 a^5 - 3na^5 + 2a^5 - 2n^3 a^4 + 2n^2 a^4 + 8na^4 - 8a^4 + n^4 a^3 + 4n^3 a^3 - 14n^2 a^3 - na^3 + 10a^3 - 3n^4 a^2 + 2n^3 a^2 + 13n^2 a^2 - Ca^2 + Da^2 + Cna^2 - 8na^2 - 4a^2 + 2n^4 a - 4n^3 a - Cn^2 a - 2n^2 a - 4Da + Cna + Dna + 4na - Dn^2 + 2D + Dn',
    },
    'J6.III.c': {
        'a6': '(1 - x^2)^3',
        'a5': '3 (-6 + a (-1 + x) - 4x) (-1 + x^2)^2',
        'a4': '- (((-1 + x^2)/(a (2 - 3a + a^2))) ) X4',
        'X4': 'D + 3a^5 (-1 + x)^2 - Dx^2 - 30a^4 (-1 + x^2) - 30a^2 (7 + 12x + 5x^2) + 15a^3 (-1 + 10x + 7x^2) + a (C - Cx^2 + 24 (8 + 9x + 3x^2))',
        'a3': '((X3)/(a (2 - 3a + a^2)))',
        'X3': 'a^6 (-1 + x)^3 - 6a^5 (-1 + x)^2 (3 + 2x) + 4D (-3 - x + 3x^2 + x^3) - 30a^3 (-5 + 6x + 11x^2 + 4x^3) + a^4 (-55 - 75x + 75x^2 + 55x^3) + 2a^2 (118 + 306x + 234x^2 + 62x^3 - C(-1 + x)^2 (1 + x)) - 2a (D(-1 + x)^2 (1 + x) - 2C (-3 - x + 3x^2 + x^3) + 12 (13 + 16x + 9x^2 + 2x^3))',
        'a2': '((X2)/(a (2 - 3a + a^2)))',
        'X2': 'a^3 C (-1 + x)^2 + 12D (3 + x) - a^2 (-1 + x) (2D + C (13 + 3x)) + 2a (-5D (-1 + x) + C (17 + 6x + x^2))',
        'a1': '((D (-6 + a (-1 + x)))/(a))',
        'lam': '- ((n(-a + n - 1))/((a - 2)(a - 1)a)) L',
        'L': 'n^2 a^5 - 3na^5 + 2a^5 - 2n^3 a^4 + 2n^2 a^4 + 8na^4 - 8a^4 + n^4 a^3 + 4n^3 a^3 - 14n^2 a^3 - na^3 + 10a^3 - 3n^4 a^2 + 2n^3 a^2 + 13n^2 a^2 - Ca^2 + Da^2 + Cna^2 - 8na^2 - 4a^2 + 2n^4 a - 4n^3 a - Cn^2 a - 2n^2 a - 4Da + Cna + Dna + 4na - Dn^2 + 2D + Dn',
    },
    'J6.IV': {
        'a6': '(1-x^2)^3',
        'a5': '3(b + (-4+a)x)(-1+x^2)^2',
        'a4': '-(((-1+x^2)/(a(2-3a+a^2)))) X4',
        'X4': 'D + 3a^5 x^2 - D x^2 + a^2(42 - 9b^2 + 66bx - 150x^2) + a^4(3 + 6bx - 30x^2) + 3a^3(-7 + b^2 - 12bx + 35x^2) + a(-24 + 6b^2 + C - 36bx + 72x^2 - Cx^2)',
        'a3': '((X3)/(a(2-3a+a^2)))',
        'X3': 'a^6 x^3 - 2D(b-2x)(-1+x^2) + 3a^5(x + bx^2 - 4x^3) + a^4(3b - 27x + 3b^2x - 24bx^2 + 55x^3) + a^3(b^3 + 84x - 15b^2x - 120x^3 + b(-19 + 69x^2)) + 2a(b^3 - 6b^2x + (-24 + 2C - D)x(-1+x^2) + b(-10 + C + 18x^2 - Cx^2)) + a^2(-3b^3 + 24b^2x + b(36 - 84x^2) + 2x(-54 + C + 62x^2 - Cx^2))',
        'a2': '((X2)/(a(2-3a+a^2)))',
        'X2': 'bD(b-2x) + a^3Cx^2a^2(C+D+2bCx-3Cx^2) + + a(2D(-1+bx) + C(-2+b^2-2bx+2x^2))',
        'a1': '((D(b+ax))/(a))',
        'lam': '-((n(-a+n-1))/((a-2)(a-1)a))L',
        'L': 'n^2a^5 - 3na^5 + 2a^5 - 2n^3a^4 + 2n^2a^4 + 8na^4 - 8a^4 + n^4a^3 + 4n^3a^3 - 14n^2a^3 - na^3 + 10a^3 - 3n^4a^2 + 2n^3a^2 + 13n^2a^2 - Ca^2 + Da^2 + Cna^2 - 8na^2 - 4a^2 + 2n^4a - 4n^3a - Cn^2a - 2n^2a - 4Da + Cna + Dna + 4na - Dn^2 + 2D + Dn',
    },
    'J8.I.a': {
        'a8': '(1 - x^2)^4',
        'a7': '-32x(1 - x^2)^3',
        'a6': '(((-1 + x^2)^2 (-3456 + D - G + 24192x^2 - Dx^2 + Gx^2 + 2F(-1 + x^2)))/(72))',
        'a5': '((x(-1 + x^2)(-2304 + D - G + 5376x^2 - Dx^2 + Gx^2 + 2F(-1 + x^2)))/(4))',
        'a4': '((X4)/(8))',
        'X4': '1152 + G - 11520x^2 - 10Gx^2 + 13440x^4 + 9Gx^4 - 2D(1 - 6x^2 + 5x^4) + 2F(1 - 10x^2 + 9x^4)',
        'a3': '((2(2F + G)x^3 + D(3x - 5x^3))/(3))',
        'a2': 'F - (3F + G)x^2',
        'a1': 'Gx',
        'lam': '((1)/(72))n(n+1)L',
        'L': '72n^6 + 216n^5 - Dn^4 + 2Fn^4 + Gn^4 - 1224n^4 - 2Dn^3 + 4Fn^3 + 2Gn^3 - 2808n^3 + 7Dn^2 - 32Fn^2 - 16Gn^2 + 6336n^2 + 8Dn - 34Fn - 17Gn + 7776n - 12D + 60F + 66G - 10368',
    },
    'J8.I.b': {
        'a8': '(1 - x^2)^4',
        'a7': '4(1 + 9x)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2(-1728 - G + 3456x + 15552x^2 + Gx^2 - 2D(-1 + x^2) + F(-1 + x^2)))/(36))',
        'a5': '(((1 - x^2))/(12))X5',
        'X5': '1152 + G + 8064x + 7Gx - 8064x^2 - Gx^2 - 24192x^3 - 7Gx^3 + 2D(-1 - 7x + x^2 + 7x^3) - F(-1 - 7x + x^2 + 7x^3)',
        'a4': '((X4)/(4))',
        'X4': '576 + G - 2304x - 4Gx - 8064x^2 - 14Gx^2 + 5376x^3 + 4Gx^3 + 12096x^4 + 13Gx^4 - 4D(1 - 2x - 8x^2 + 2x^3 + 7x^4) + F(1 - 4x - 14x^2 + 4x^3 + 13x^4)',
        'a3': '((2(F + G)x^2(3 + 5x))/(3)) + D(1 + 5x - 5x^2 - ((35x^3)/(3)))',
        'a2': '-2Gx(1 + 2x) + F(1 - 2x - 5x^2)',
        'a1': 'G + 3Gx',
        'lam': '((1)/(36))n(n + 2)L',
        'L': '36n^6 + 216n^5 - 2Dn^4 + Fn^4 + Gn^4 - 504n^4 - 8Dn^3 + 4Fn^3 + 4Gn^3 - 3456n^3 + 14Dn^2 - 16Fn^2 - 16Gn^2 + 3060n^2 + 44Dn - 40Fn - 40Gn + 13608n - 48D + 51F + 87G - 12960',
    },
    'J8.I.c': {
        'a8': '(1 - x^2)^4',
        'a7': '8 (1 + 5x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-1296 + D - G + 7776x + 19440x^2 - Dx^2 + Gx^2 + 2F(-1 + x^2)))/(36))',
        'a5': '(((1 - x^2))/(6)) X5',
        'X5': '1152 + G + 3456x + 4Gx - 10368x^2 - Gx^2 - 17280x^3 - 4Gx^3 + D(-1 - 4x + x^2 + 4x^3) - 2F(-1 - 4x + x^2 + 4x^3)',
        'a4': '((X4)/(12))',
        'X4': '576 + G - 16128x - 28Gx - 24192x^2 - 54Gx^2 + 48384x^3 + 28Gx^3 + 60480x^4 + 53Gx^4 - 4D(1 - 7x - 15x^2 + 7x^3 + 14x^4) + 2F(1 - 28x - 54x^2 + 28x^3 + 53x^4)',
        'a3': '(((2F + G)x(3 + 18x + 19x^2))/(3)) + D(1 + 2x - 7x^2 - ((28x^3)/(3)))',
        'a2': '-(Gx(5 + 7x)) + F(1 - 10x - 15x^2)',
        'a1': 'G + 2Gx',
        'lam': '((1)/(36))n(n+3)L',
        'L': '36n^6 + 324n^5 - Dn^4 + 2Fn^4 + Gn^4 - 180n^4 - 6Dn^3 + 12Fn^3 + 6Gn^3 - 5940n^3 + 5Dn^2 - 28Fn^2 - 14Gn^2 + 144n^2 + 42Dn - 138Fn - 69Gn + 31536n - 40D + 152F + 94G - 25920',
    },
    'J8.I.d': {
        'a8': '(1 - x^2)^4',
        'a7': '4 (3 + 11x) (-1 + x^2)^3',
        'a6': '((-((-1 + x^2)^2 (576 - G - 17280x - 31680x^2 + Gx^2 + D(-1 + x^2) + 3F(-1 + x^2))))/(48))',
        'a5': '((-3(-1 + x^2))/(16)) X5',
        'X5': '1408 - G + 1152x - 3Gx - 17280x^2 + Gx^2 - 21120x^3 + 3Gx^3 + D(-1 - 3x + x^2 + 3x^3) + 3F(-1 - 3x + x^2 + 3x^3)',
        'a4': '((X4)/(6))',
        'X4': 'F(3 + 54x + 75x^2 - 54x^3 - 78x^4) + G(1 + 18x + 25x^2 - 18x^3 - 26x^4) - 9(96 - 2(-704 + D)x - 3(-192 + D)x^2 + 2(-2880 + D)x^3 + 3(-1760 + D)x^4)',
        'a3': '(((-3F - G)x(14 + 57x + 49x^2) + D(6 - 63x^2 - 63x^3))/(6))',
        'a2': '((2Gx(9 + 11x))/(3)) + F(1 + 18x + 21x^2)',
        'a1': 'G + ((5Gx)/(3))',
        'lam': '((1)/(48))n(n + 4)L',
        'L': '48n^6 + 576n^5 - Dn^4 - 3Fn^4 - Gn^4 + 480n^4 - 8Dn^3 - 24Fn^3 - 8Gn^3 - 11520n^3 + Dn^2 + 27Fn^2 + 9Gn^2 - 9168n^2 + 68Dn + 300Fn + 100Gn + 80064n - 60D - 300F - 84G - 60480',
    },
    'J8.I.e': {
        'a8': '(1 - x^2)^4',
        'a7': '4(-1 + 9x)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2(-1728 + G - 3456x + 15552x^2 - Gx^2 + 2D(-1 + x^2) + F(-1 + x^2)))/(36))',
        'a5': '((-1 + x^2)/(12))X5',
        'X5': '1152 - G - 8064x + 7Gx - 8064x^2 + Gx^2 + 24192x^3 - 7Gx^3 + 2D(1 - 7x - x^2 + 7x^3) + F(1 - 7x - x^2 + 7x^3)',
        'a4': '((X4)/(4))',
        'X4': '576 - G + 2304x - 4Gx - 8064x^2 + 14Gx^2 - 5376x^3 + 4Gx^3 + 12096x^4 - 13Gx^4 + 4D(1 + 2x - 8x^2 - 2x^3 + 7x^4) + F(1 + 4x - 14x^2 - 4x^3 + 13x^4)',
        'a3': '((2(F - G)x^2(-3 + 5x))/(3)) + D(1 - 5x - 5x^2 + ((35x^3)/(3)))',
        'a2': '2Gx(-1 + 2x) + F(1 + 2x - 5x^2)',
        'a1': 'G - 3Gx',
        'lam': '((1)/(36))n(n + 2)L',
        'L': '36n^6 + 216n^5 + 2Dn^4 + Fn^4 - Gn^4 - 504n^4 + 8Dn^3 + 4Fn^3 - 4Gn^3 - 3456n^3 - 14Dn^2 - 16Fn^2 + 16Gn^2 + 3060n^2 - 44Dn - 40Fn + 40Gn + 13608n + 48D + 51F - 87G - 12960',
    },
    'J8.I.f': {
        'a8': '(1 - x^2)^4',
        'a7': '40x(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-17280 - G + 155520x^2 + Gx^2 - 2D(-1 + x^2) + 4F(-1 + x^2)))/(288))',
        'a5': '((x(-1 + x^2)(-11520 - G + 34560x^2 + Gx^2 - 2D(-1 + x^2) + 4F(-1 + x^2)))/(12))',
        'a4': '((X4)/(24))',
        'X4': '5760 + G - 80640x^2 - 14Gx^2 + 120960x^4 + 13Gx^4 - 4D(1 - 8x^2 + 7x^4) + F(4 - 56x^2 + 52x^4)',
        'a3': '((2(4F + G)x^3 + D(3x - 7x^3))/(3))',
        'a2': 'F - (5F + G)x^2',
        'a1': 'Gx',
        'lam': '((1)/(288))n(n+3)L',
        'L': '288n^6 + 2592n^5 - 2Dn^4 + 4Fn^4 + Gn^4 - 1440n^4 - 12Dn^3 + 24Fn^3 + 6Gn^3 - 47520n^3 + 10Dn^2 - 68Fn^2 - 17Gn^2 + 1152n^2 + 84Dn - 312Fn - 78Gn + 252288n - 80D + 352F + 160G - 207360',
    },
    'J8.I.g': {
        'a8': '(1 - x^2)^4',
        'a7': '4 (1 + 11x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-4320 - G + 8640x + 47520x^2 + Gx^2 - 3D(-1 + x^2) + F(-1 + x^2)))/(72))',
        'a5': '(((1 - x^2))/(24)) X5',
        'X5': '2880 + G + 25920x + 9Gx - 25920x^2 - Gx^2 - 95040x^3 - 9Gx^3 + 3D(-1 - 9x + x^2 + 9x^3) - F(-1 - 9x + x^2 + 9x^3)',
        'a4': '((X4)/(6))',
        'X4': '1440 + G - 5760x - 4Gx - 25920x^2 - 18Gx^2 + 17280x^3 + 4Gx^3 + 47520x^4 + 17Gx^4 - 6D(1 - 2x - 10x^2 + 2x^3 + 9x^4) + F(1 - 4x - 18x^2 + 4x^3 + 17x^4)',
        'a3': '((2(F + G)x^2(3 + 7x))/(3)) + D(1 + 7x - 7x^2 - 21x^3)',
        'a2': '2Gx(1 + 3x) + F(1 - 2x - 7x^2)',
        'a1': 'G + 5Gx',
        'lam': '((1)/(72))n(n + 4)L',
        'L': '72n^6 + 864n^5 - 3Dn^4 + Fn^4 + Gn^4 + 720n^4 - 24Dn^3 + 8Fn^3 + 8Gn^3 - 17280n^3 + 3Dn^2 - 13Fn^2 - 13Gn^2 - 13752n^2 + 204Dn - 116Fn - 116Gn + 120096n - 180D + 120F + 192G - 90720',
    },
    'J8.I.h': {
        'a8': '(1 - x^2)^4',
        'a7': '8 (1 + 6x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-4608 - G + 25344x + 76032x^2 + Gx^2 - 2D(-1 + x^2) + 2F(-1 + x^2)))/(96))',
        'a5': '(((1 - x^2))/(16)) X5',
        'X5': '3840 + G + 15360x + 5Gx - 42240x^2 - Gx^2 - 84480x^3 - 5Gx^3 + 2D(-1 - 5x + x^2 + 5x^3) - 2F(-1 - 5x + x^2 + 5x^3)',
        'a4': '((X4)/(16))',
        'X4': '1920 + G - 34560x - 18Gx - 69120x^2 - 44Gx^2 + 126720x^3 + 18Gx^3 + 190080x^4 + 43Gx^4 - 6D(1 - 6x - 16x^2 + 6x^3 + 15x^4) + F(2 - 36x - 88x^2 + 36x^3 + 86x^4)',
        'a3': '(((2F + G)x(1 + 8x + 11x^2))/(2)) + D(1 + 3x - 9x^2 - 15x^3)',
        'a2': '((-(Gx(7 + 13x)))/(2)) + F(1 - 7x - 14x^2)',
        'a1': 'G + 3Gx',
        'lam': '((1)/(96))n(n + 5)L',
        'L': '96n^6 + 1440n^5 - 2Dn^4 + 2Fn^4 + Gn^4 + 2976n^4 - 20Dn^3 + 20Fn^3 + 10Gn^3 - 30240n^3 - 10Dn^2 - 14Fn^2 - 7Gn^2 - 51456n^2 + 200Dn - 320Fn - 160Gn + 270720n - 168D + 312F + 204G - 193536',
    },
    'J8.I.i': {
        'a8': '(1 - x^2)^4',
        'a7': '8(-1 + 5x)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2(-1296 + G - 7776x + 19440x^2 - Gx^2 + D(-1 + x^2) + 2F(-1 + x^2)))/(36))',
        'a5': '(((-1 + x^2))/(6)) X5',
        'X5': '1152 - G - 3456x + 4Gx - 10368x^2 + Gx^2 + 17280x^3 - 4Gx^3 + D(1 - 4x - x^2 + 4x^3) + F(2 - 8x - 2x^2 + 8x^3)',
        'a4': '((X4)/(12))',
        'X4': '576 - G + 16128x - 28Gx - 24192x^2 + 54Gx^2 - 48384x^3 + 28Gx^3 + 60480x^4 - 53Gx^4 + 4D(1 + 7x - 15x^2 - 7x^3 + 14x^4) + 2F(1 + 28x - 54x^2 - 28x^3 + 53x^4)',
        'a3': '(((2F - G)x(3 - 18x + 19x^2))/(3)) + D(1 - 2x - 7x^2 + ((28x^3)/(3)))',
        'a2': 'Gx(-5 + 7x) + F(1 + 10x - 15x^2)',
        'a1': 'G - 2Gx',
        'lam': '((1)/(36))n(n+3)L',
        'L': '36n^6 + 324n^5 + Dn^4 + 2Fn^4 - Gn^4 - 180n^4 + 6Dn^3 + 12Fn^3 - 6Gn^3 - 5940n^3 - 5Dn^2 - 28Fn^2 + 14Gn^2 + 144n^2 - 42Dn - 138Fn + 69Gn + 31536n + 40D + 152F - 94G - 25920',
    },
    'J8.I.j': {
        'a8': '(1 - x^2)^4',
        'a7': '4 (-1 + 11x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-4320 + G - 8640x + 47520x^2 - Gx^2 + 3D(-1 + x^2) + F(-1 + x^2)))/(72))',
        'a5': '(((-1 + x^2))/(24)) X5',
        'X5': '2880 - G - 25920x + 9Gx - 25920x^2 + Gx^2 + 95040x^3 - 9Gx^3 + 3D(1 - 9x - x^2 + 9x^3) + F(1 - 9x - x^2 + 9x^3)',
        'a4': '((X4)/(6))',
        'X4': '1440 - G + 5760x - 4Gx - 25920x^2 + 18Gx^2 - 17280x^3 + 4Gx^3 + 47520x^4 - 17Gx^4 + 6D(1 + 2x - 10x^2 - 2x^3 + 9x^4) + F(1 + 4x - 18x^2 - 4x^3 + 17x^4)',
        'a3': '((2(F - G)x^2(-3 + 7x))/(3)) + D(1 - 7x - 7x^2 + 21x^3)',
        'a2': '2Gx(-1 + 3x) + F(1 + 2x - 7x^2)',
        'a1': 'G - 5Gx',
        'lam': '((1)/(72))n(n + 4)L',
        'L': '72n^6 + 864n^5 + 3Dn^4 + Fn^4 - Gn^4 + 720n^4 + 24Dn^3 + 8Fn^3 - 8Gn^3 - 17280n^3 - 3Dn^2 - 13Fn^2 + 13Gn^2 - 13752n^2 - 204Dn - 116Fn + 116Gn + 120096n + 180D + 120F - 192G - 90720',
    },
    'J8.I.k': {
        'a8': '(1 - x^2)^4',
        'a7': '48x(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-51840 - G + 570240x^2 + Gx^2 - 3D(-1 + x^2) + 6F(-1 + x^2)))/(720))',
        'a5': '((x(-1 + x^2)(-34560 - G + 126720x^2 + Gx^2 - 3D(-1 + x^2) + 6F(-1 + x^2)))/(24))',
        'a4': '((X4)/(48))',
        'X4': '17280 + G - 311040x^2 - 18Gx^2 + 570240x^4 + 17Gx^4 - 6D(1 - 10x^2 + 9x^4) + 6F(1 - 18x^2 + 17x^4)',
        'a3': 'Dx + (-3D + 4F + ((2G)/(3)))x^3',
        'a2': 'F - (7F + G)x^2',
        'a1': 'Gx',
        'lam': '((1)/(720))n(n+5)L',
        'L': '720n^6 + 10800n^5 - 3Dn^4 + 6Fn^4 + Gn^4 + 22320n^4 - 30Dn^3 + 60Fn^3 + 10Gn^3 - 226800n^3 - 15Dn^2 - 60Fn^2 - 10Gn^2 - 385920n^2 + 300Dn - 1050Fn - 175Gn + 2030400n - 252D + 1044F + 294G - 1451520',
    },
    'J8.I.l': {
        'a8': '(1 - x^2)^4',
        'a7': '4 (1 + 13x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-8640 - G + 17280x + 112320x^2 + Gx^2 - 4D(-1 + x^2) + F(-1 + x^2)))/(120))',
        'a5': '(((1 - x^2))/(40)) X5',
        'X5': '5760 + G + 63360x + 11Gx - 63360x^2 - Gx^2 - 274560x^3 - 11Gx^3 + 4D(-1 - 11x + x^2 + 11x^3) - F(-1 - 11x + x^2 + 11x^3)',
        'a4': '((X4)/(8))',
        'X4': '2880 + G - 11520x - 4Gx - 63360x^2 - 22Gx^2 + 42240x^3 + 4Gx^3 + 137280x^4 + 21Gx^4 - 8D(1 - 2x - 12x^2 + 2x^3 + 11x^4) + F(1 - 4x - 22x^2 + 4x^3 + 21x^4)',
        'a3': '2(F + G)x^2(1 + 3x) + D(1 + 9x - 9x^2 - 33x^3)',
        'a2': '-2Gx(1 + 4x) + F(1 - 2x - 9x^2)',
        'a1': 'G + 7Gx',
        'lam': '((1)/(120))n(n + 6)L',
        'L': '120n^6 + 2160n^5 - 4Dn^4 + Fn^4 + Gn^4 + 6960n^4 - 48Dn^3 + 12Fn^3 + 12Gn^3 - 46080n^3 - 52Dn^2 - 2Fn^2 - 2Gn^2 - 128040n^2 + 552Dn - 228Fn - 228Gn + 527760n - 448D + 217F + 337G - 362880',
    },
    'J8.I.m': {
        'a8': '(1 - x^2)^4',
        'a7': '4(-3 + 11x)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2(-576 - G - 17280x + 31680x^2 + Gx^2 + D(-1 + x^2) - 3F(-1 + x^2)))/(48))',
        'a5': '((3(-1 + x^2))/(16))X5',
        'X5': '1408 + G - 1152x - 3Gx - 17280x^2 - Gx^2 + 21120x^3 + 3Gx^3 + F(-3 + 9x + 3x^2 - 9x^3) + D(1 - 3x - x^2 + 3x^3)',
        'a4': '((X4)/(6))',
        'X4': 'F(3 - 54x + 75x^2 + 54x^3 - 78x^4) + G(-1 + 18x - 25x^2 - 18x^3 + 26x^4) + 9(-96 + 2(704 + D)x - 3(192 + D)x^2 - 2(2880 + D)x^3 + 3(1760 + D)x^4)',
        'a3': '(((-3F + G)x(14 - 57x + 49x^2) + D(6 - 63x^2 + 63x^3))/(6))',
        'a2': '((2G(9 - 11x)x)/(3)) + F(1 - 18x + 21x^2)',
        'a1': 'G - ((5Gx)/(3))',
        'lam': '((1)/(48))n(n+4)L',
        'L': '48n^6 + 576n^5 + Dn^4 - 3Fn^4 + Gn^4 + 480n^4 + 8Dn^3 - 24Fn^3 + 8Gn^3 - 11520n^3 - Dn^2 + 27Fn^2 - 9Gn^2 - 9168n^2 - 68Dn + 300Fn - 100Gn + 80064n + 60D - 300F + 84G - 60480',
    },
    'J8.I.n': {
        'a8': '(1 - x^2)^4',
        'a7': '8 (-1 + 6x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-4608 + G - 25344x + 76032x^2 - Gx^2 + 2D(-1 + x^2) + 2F(-1 + x^2)))/(96))',
        'a5': '(((-1 + x^2))/(16)) X5',
        'X5': '3840 - G - 15360x + 5Gx - 42240x^2 + Gx^2 + 84480x^3 - 5Gx^3 + 2D(1 - 5x - x^2 + 5x^3) + 2F(1 - 5x - x^2 + 5x^3)',
        'a4': '((X4)/(16))',
        'X4': '1920 - G + 34560x - 18Gx - 69120x^2 + 44Gx^2 - 126720x^3 + 18Gx^3 + 190080x^4 - 43Gx^4 + 6D(1 + 6x - 16x^2 - 6x^3 + 15x^4) + F(2 + 36x - 88x^2 - 36x^3 + 86x^4)',
        'a3': '(((2F - G)x(1 - 8x + 11x^2))/(2)) + D(1 - 3x - 9x^2 + 15x^3)',
        'a2': '((Gx(-7 + 13x))/(2)) + F(1 + 7x - 14x^2)',
        'a1': 'G - 3Gx',
        'lam': '((1)/(96))n(n+5)L',
        'L': '96n^6 + 1440n^5 + 2Dn^4 + 2Fn^4 - Gn^4 + 2976n^4 + 20Dn^3 + 20Fn^3 - 10Gn^3 - 30240n^3 + 10Dn^2 - 14Fn^2 + 7Gn^2 - 51456n^2 - 200Dn - 320Fn + 160Gn + 270720n + 168D + 312F - 204G - 193536',
    },
    'J8.I.o': {
        'a8': '(1 - x^2)^4',
        'a7': '4 (-1 + 13x) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-8640 + G - 17280x + 112320x^2 - Gx^2 + 4D (-1 + x^2) + F (-1 + x^2)))/(120))',
        'a5': '(((-1 + x^2))/(40)) X5',
        'X5': '5760 - G - 63360x + 11Gx - 63360x^2 + Gx^2 + 274560x^3 - 11Gx^3 + F(1 - 11x - x^2 + 11x^3) + D(4 - 44x - 4x^2 + 44x^3)',
        'a4': '((X4)/(8))',
        'X4': '2880 - G + 11520x - 4Gx - 63360x^2 + 22Gx^2 - 42240x^3 + 4Gx^3 + 137280x^4 - 21Gx^4 + 8D(1 + 2x - 12x^2 - 2x^3 + 11x^4) + F(1 + 4x - 22x^2 - 4x^3 + 21x^4)',
        'a3': '2(F - G)x^2(-1 + 3x) + D(1 - 9x - 9x^2 + 33x^3)',
        'a2': '2Gx(-1 + 4x) + F(1 + 2x - 9x^2)',
        'a1': 'G - 7Gx',
        'lam': '((1)/(120))n(n+6)L',
        'L': '120n^6 + 2160n^5 + 4Dn^4 + Fn^4 - Gn^4 + 6960n^4 + 48Dn^3 + 12Fn^3 - 12Gn^3 - 46080n^3 + 52Dn^2 - 2Fn^2 + 2Gn^2 - 128040n^2 - 552Dn - 228Fn + 228Gn + 527760n + 448D + 217F - 337G - 362880',
    },
    'J8.I.p': {
        'a8': '(1 - x^2)^4',
        'a7': '56 x (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2 (-120960 - G + 1572480 x^2 + G x^2 - 4 D (-1 + x^2) + 8 F (-1 + x^2)))/(1440))',
        'a5': '((x (-1 + x^2) (-80640 - G + 349440 x^2 + G x^2 - 4 D (-1 + x^2) + 8 F (-1 + x^2)))/(40))',
        'a4': '((X4)/(80))',
        'X4': '40320 + G - 887040 x^2 - 22 G x^2 + 1921920 x^4 + 21 G x^4 + D (-8 + 96 x^2 - 88 x^4) + 8 F (1 - 22 x^2 + 21 x^4)',
        'a3': 'D x - (((11 D - 2 (8 F + G)) x^3)/(3))',
        'a2': 'F - (9 F + G) x^2',
        'a1': 'G x',
        'lam': '((1)/(1440)) n(n + 7) L',
        'L': '1440n^6 + 30240n^5 - 4Dn^4 + 8Fn^4 + Gn^4 + 131040n^4 - 56Dn^3 + 112Fn^3 + 14Gn^3 - 635040n^3 - 92Dn^2 + 40Fn^2 + 5Gn^2 - 2620800n^2 + 728Dn - 2464Fn - 308Gn + 9313920n - 576D + 2304F + 468G - 6220800',
    },
    'J8.II.a': {
        'a8': '(1 - x^2)^4',
        'a7': '-4(2 + a - 6x + ax)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2)/((2 + a)(24 - 50a + 35a^2 - 10a^3 + a^4))) X6',
        'X6': '-576 + 2352a - 2232a^2 - 36a^3 + 666a^4 - 162a^5 - 18a^6 + 6a^7 - 2D + aD + a^2D - 2F + aF - 5760x + 7392ax + 912a^2x - 3432a^3x + 660a^4x + 348a^5x - 132a^6x + 12a^7x + 8640x^2 - 16848ax^2 + 8904a^2x^2 + 924a^3x^2 - 2310a^4x^2 + 798a^5x^2 - 114a^6x^2 + 6a^7x^2 + 2Dx^2 - aDx^2 - a^2Dx^2 + 2Fx^2 - aFx^2',
        'a5': '((-1 + x^2)/((2 + a)(24 - 50a + 35a^2 - 10a^3 + a^4))) X5',
        'X5': '4608 - 7680a + 800a^2 + 3824a^3 - 1304a^4 - 460a^5 + 220a^6 - 4a^7 - 4a^8 + 12D - 9a^2D - 3a^3D + 12F - 3a^2F - 4608x + 19968ax - 22560a^2x + 4176a^3x + 5400a^4x - 2628a^5x + 180a^6x + 84a^7x - 12a^8x - 24Dx + 18aDx + 9a^2Dx - 3a^3Dx - 24Fx + 18aFx - 3a^2Fx - 23040x^2 + 35328ax^2 - 3744a^2x^2 - 14640a^3x^2 + 6072a^4x^2 + 732a^5x^2 - 876a^6x^2 + 180a^7x^2 - 12a^8x^2 - 12Dx^2 + 9a^2Dx^2 + 3a^3Dx^2 - 12Fx^2 + 3a^2Fx^2 + 23040x^3 - 50688ax^3 + 34976a^2x^3 - 3472a^3x^3 - 6776a^4x^3 + 3668a^5x^3 - 836a^6x^3 + 92a^7x^3 - 4a^8x^3 + 24Dx^3 - 18aDx^3 - 9a^2Dx^3 + 3a^3Dx^3 + 24Fx^3 - 18aFx^3 + 3a^2Fx^3',
        'a4': '((X4)/(2(2 + a)(24 - 50a + 35a^2 - 10a^3 + a^4)))',
        'X4': '-2304 - 4608a + 14320a^2 - 6312a^3 - 3308a^4 + 2426a^5 - 80a^6 - 148a^7 + 12a^8 + 2a^9 - 60aD + 18a^2D + 36a^3D + 6a^4D - 24F - 34aF + 9a^2F + 7a^3F + 27648x - 55296ax + 20160a^2x + 21344a^3x - 15472a^4x - 152a^5x + 2240a^6x - 464a^7x - 16a^8x + 8a^9x + 144Dx - 48aDx - 108a^2Dx + 12a^4Dx + 144Fx - 48aFx - 36a^2Fx + 12a^3Fx - 13824x^2 + 64512ax^2 - 87648a^2x^2 + 35088a^3x^2 + 12024a^4x^2 - 13284a^5x^2 + 3168a^6x^2 + 72a^7x^2 - 120a^8x^2 + 12a^9x^2 - 144Dx^2 + 216aDx^2 - 72a^3Dx^2 - 96Fx^2 + 164aFx^2 - 54a^2Fx^2 - 2a^3Fx^2 - 46080x^3 + 86016ax^3 - 31040a^2x^3 - 26784a^3x^3 + 21904a^4x^3 - 2584a^5x^3 - 2240a^6x^3 + 944a^7x^3 - 144a^8x^3 + 8a^9x^3 - 144Dx^3 + 48aDx^3 + 108a^2Dx^3 - 12a^4Dx^3 - 144Fx^3 + 48aFx^3 + 36a^2Fx^3 - 12a^3Fx^3 + 34560x^4 - 87552ax^4 + 77808a^2x^4 - 22696a^3x^4 - 8428a^4x^4 + 8890a^5x^4 - 3088a^6x^4 + 556a^7x^4 - 52a^8x^4 + 2a^9x^4 + 144Dx^4 - 156aDx^4 - 18a^2Dx^4 + 36a^3Dx^4 - 6a^4Dx^4 + 120Fx^4 - 130aFx^4 + 45a^2Fx^4 - 5a^3Fx^4',
        'a3': '((X3)/(48 - 76a + 20a^2 + 15a^3 - 8a^4 + a^5))',
        'X3': '24D - 28aD - 22a^2D + 15a^3D + 10a^4D + a^5D - 24F - 2a^2F + 2a^4F + 60aDx - 48a^2Dx - 27a^3Dx + 12a^4Dx + 3a^5Dx + 48Fx - 16aFx - 4a^2Fx - 8a^3Fx + 4a^4Fx - 72Dx^2 + 60aDx^2 + 42a^2Dx^2 - 27a^3Dx^2 - 6a^4Dx^2 + 3a^5Dx^2 - 24Fx^2 + 32aFx^2 - 2a^2Fx^2 - 8a^3Fx^2 + 2a^4Fx^2 + 48Dx^3 - 76aDx^3 + 20a^2Dx^3 + 15a^3Dx^3 - 8a^4Dx^3 + a^5Dx^3',
        'a2': '((X2)/(2a(-2+a+a^2)))',
        'X2': '2aF + 5a^2F + a^3F - 4G + 2aG + 2a^2G - 4aFx + 2a^2Fx + 2a^3Fx + 2aFx^2 - 3a^2Fx^2 + a^3Fx^2 + 4Gx^2 - 2aGx^2 - 2a^2Gx^2',
        'a1': '((G(2+a+ax))/(a))',
        'lam': '((n(-a+n-1))/(2(a-4)(a-3)(a-2)(a-1)a(a+2))) L',
        'L': '-2n^3a^9 + 12n^2a^9 - 22na^9 + 12a^9 + 6n^4a^8 - 14n^3a^8 - 66n^2a^8 + 206na^8 - 132a^8 - 6n^5a^7 - 24n^4a^7 + 212n^3a^7 - 132n^2a^7 - 542na^7 + 492a^7 + 2n^6a^6 + 42n^5a^6 - 112n^4a^6 - 476n^3a^6 + 1274n^2a^6 - 238na^6 - 492a^6 - 16n^6a^5 - 42n^5a^5 + 560n^4a^5 - 658n^3a^5 - 2Dn^2a^5 - 1456n^2a^5 - 4Da^5 + Fa^5 - 2Ga^5 + 6Dna^5 - Fna^5 + 2884na^5 - 1272a^5 + 30n^6a^4 - 210n^5a^4 - 126n^4a^4 + 4Dn^3a^4 + 2674n^3a^4 - 12Dn^2a^4 - Fn^2a^4 - 3024n^2a^4 - 13Fa^4 + 16Ga^4 + 8Dna^4 + 14Fna^4 - 3136na^4 + 3792a^4 + 40n^6a^3 + 336n^5a^3 - 2Dn^4a^3 - 1736n^4a^3 + 8Dn^3a^3 + 4Fn^3a^3 - 992n^3a^3 - 4Dn^2a^3 - 15Fn^2a^3 + 7072n^2a^3 + 12Da^3 + 38Fa^3 - 30Ga^3 - 14Dna^3 - 27Fna^3 - 1168na^3 - 3552a^3 - 152n^6a^2 + 168n^5a^2 - 2Dn^4a^2 - 2Fn^4a^2 + 1912n^4a^2 - 4Dn^3a^2 - 4Fn^3a^2 - 2184n^3a^2 + 22Dn^2a^2 + 48Fn^2a^2 - 4064n^2a^2 - 8Da^2 - 32Fa^2 - 40Ga^2 - 8Dna^2 - 10Fna^2 + 3168na^2 + 1152a^2 + 96n^6a - 288n^5a + 4Dn^4a + 4Fn^4a - 480n^4a - 8Dn^3a - 8Fn^3a + 1440n^3a - 4Dn^2a - 28Fn^2a + 384n^2a + 152Ga + 8Dna + 32Fna - 1152na - 96G',
    },
    'J8.II.b': {
        'a8': '(1 - x^2)^4',
        'a7': '-4(4 + a - 6x + ax)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2)/(-96 + 176a - 90a^2 + 5a^3 + 6a^4 - a^5)) X6',
        'X6': '-5760 + 5376a + 3528a^2 - 3504a^3 + 90a^4 + 294a^5 - 18a^6 - 6a^7 + 4D - 3aD - a^2D + 2F - aF + 23040x - 41088ax + 18336a^2x + 1992a^3x - 2580a^4x + 228a^5x + 84a^6x - 12a^7x - 17280x^2 + 38016ax^2 - 28392a^2x^2 + 7896a^3x^2 + 210a^4x^2 - 546a^5x^2 + 102a^6x^2 - 6a^7x^2 - 4Dx^2 + 3aDx^2 + a^2Dx^2 - 2Fx^2 + aFx^2',
        'a5': '((-1 + x^2)/(-96 + 176a - 90a^2 + 5a^3 + 6a^4 - a^5)) X5',
        'X5': '16896a - 25216a^2 + 5664a^3 + 3816a^4 - 996a^5 - 204a^6 + 36a^7 + 4a^8 - 48D + 24aD + 21a^2D + 3a^3D - 24F + 6aF + 3a^2F - 46080x + 54528ax + 17472a^2x - 35088a^3x + 7728a^4x + 2172a^5x - 732a^6x - 12a^7x + 12a^8x + 48Dx - 48aDx - 3a^2Dx + 3a^3Dx + 24Fx - 18aFx + 3a^2Fx + 92160x^2 - 187392ax^2 + 114432a^2x^2 - 10368a^3x^2 - 12312a^4x^2 + 3492a^5x^2 + 108a^6x^2 - 132a^7x^2 + 12a^8x^2 + 48Dx^2 - 24aDx^2 - 21a^2Dx^2 - 3a^3Dx^2 + 24Fx^2 - 6aFx^2 - 3a^2Fx^2 - 46080x^3 + 112896ax^3 - 101056a^2x^3 + 39984a^3x^3 - 4704a^4x^3 - 1596a^5x^3 + 636a^6x^3 - 84a^7x^3 + 4a^8x^3 - 48Dx^3 + 48aDx^3 + 3a^2Dx^3 - 3a^3Dx^3 - 24Fx^3 + 18aFx^3 - 3a^2Fx^3',
        'a4': '((X4)/(2(-96 + 176a - 90a^2 + 5a^3 + 6a^4 - a^5)))',
        'X4': '23040 - 61056a + 33248a^2 + 18824a^3 - 14328a^4 - 1002a^5 + 1272a^6 + 36a^7 - 32a^8 - 2a^9 + 288D - 210a^2D - 72a^3D - 6a^4D + 168F + 10aF - 33a^2F - 7a^3F + 101376ax - 185088a^2x + 84416a^3x + 11568a^4x - 13608a^5x + 768a^6x + 624a^7x - 48a^8x - 8a^9x - 576Dx + 480aDx + 156a^2Dx - 48a^3Dx - 12a^4Dx - 288Fx + 168aFx + 12a^2Fx - 12a^3Fx - 138240x^2 + 209664ax^2 - 2112a^2x^2 - 122736a^3x^2 + 58272a^4x^2 - 1212a^5x^2 - 4368a^6x^2 + 696a^7x^2 + 48a^8x^2 - 12a^9x^2 - 384aDx^2 + 288a^2Dx^2 + 96a^3Dx^2 - 48Fx^2 - 140aFx^2 + 78a^2Fx^2 + 2a^3Fx^2 + 184320x^3 - 436224ax^3 + 353792a^2x^3 - 97024a^3x^3 - 17712a^4x^3 + 15192a^5x^3 - 2112a^6x^3 - 336a^7x^3 + 112a^8x^3 - 8a^9x^3 + 576Dx^3 - 480aDx^3 - 156a^2Dx^3 + 48a^3Dx^3 + 12a^4Dx^3 + 288Fx^3 - 168aFx^3 - 12a^2Fx^3 + 12a^3Fx^3 - 69120x^4 + 192384ax^4 - 208032a^2x^4 + 110504a^3x^4 - 27048a^4x^4 - 42a^5x^4 + 1752a^6x^4 - 444a^7x^4 + 48a^8x^4 - 2a^9x^4 - 288Dx^4 + 384aDx^4 - 78a^2Dx^4 - 24a^3Dx^4 + 6a^4Dx^4 - 120Fx^4 + 130aFx^4 - 45a^2Fx^4 + 5a^3Fx^4',
        'a3': '((X3)/(96 - 176a + 90a^2 - 5a^3 - 6a^4 + a^5))',
        'X3': '-96D - 128aD + 114a^2D + 91a^3D + 18a^4D + a^5D - 144F + 4aF + 10a^2F + 8a^3F + 2a^4F + 288Dx - 144aDx - 210a^2Dx + 33a^3Dx + 30a^4Dx + 3a^5Dx + 192Fx - 112aFx - 16a^2Fx + 4a^3Fx + 4a^4Fx - 288Dx^2 + 384aDx^2 - 42a^2Dx^2 - 63a^3Dx^2 + 6a^4Dx^2 + 3a^5Dx^2 - 48Fx^2 + 76aFx^2 - 26a^2Fx^2 - 4a^3Fx^2 + 2a^4Fx^2 + 96Dx^3 - 176aDx^3 + 90a^2Dx^3 - 5a^3Dx^3 - 6a^4Dx^3 + a^5Dx^3',
        'a2': '((X2)/(2a(-4 + 3a + a^2)))',
        'X2': '14aF + 9a^2F + a^3F - 8G + 6aG + 2a^2G - 8aFx + 6a^2Fx + 2a^3Fx + 2aFx^2 - 3a^2Fx^2 + a^3Fx^2 + 8Gx^2 - 6aGx^2 - 2a^2Gx^2',
        'a1': '((G(4 + a + ax))/(a))',
        'lam': '((n(-a + n - 1))/(2(a - 4)(a - 3)(a - 2)(a - 1)a(a + 4))) L',
        'L': '-2n^3a^9 + 12n^2a^9 - 22na^9 + 12a^9 + 6n^4a^8 - 18n^3a^8 - 42n^2a^8 + 162na^8 - 108a^8 - 6n^5a^7 - 12n^4a^7 + 192n^3a^7 - 312n^2a^7 - 42na^7 + 180a^7 + 2n^6a^6 + 30n^5a^6 - 184n^4a^6 - 12n^3a^6 + 1370n^2a^6 - 2322na^6 + 1116a^6 - 12n^6a^5 + 66n^5a^5 + 480n^4a^5 - 2538n^3a^5 - 2Dn^2a^5 + 900n^2a^5 - 4Da^5 + Fa^5 - 2Ga^5 + 6Dna^5 - Fna^5 + 6576na^5 - 5472a^5 - 10n^6a^4 - 510n^5a^4 + 1154n^4a^4 + 4Dn^3a^4 + 5118n^3a^4 - 16Dn^2a^4 - Fn^2a^4 - 10648n^2a^4 - 8Da^4 - 13Fa^4 + 12Ga^4 + 20Dna^4 + 14Fna^4 - 4752na^4 + 9648a^4 + 180n^6a^3 + 516n^5a^3 - 2Dn^4a^3 - 4548n^4a^3 + 16Dn^3a^3 + 4Fn^3a^3 - 532n^3a^3 - 20Dn^2a^3 - 15Fn^2a^3 + 16272n^2a^3 + 28Da^3 + 38Fa^3 + 10Ga^3 - 22Dna^3 - 27Fna^3 - 4208na^3 - 7680a^3 - 352n^6a^2 + 480n^5a^2 - 6Dn^4a^2 - 2Fn^4a^2 + 4064n^4a^2 - 4Dn^3a^2 - 4Fn^3a^2 - 5088n^3a^2 + 46Dn^2a^2 + 48Fn^2a^2 - 8320n^2a^2 - 16Da^2 - 32Fa^2 - 180Ga^2 - 20Dna^2 - 10Fna^2 + 6912na^2 + 2304a^2 + 192n^6a - 576n^5a + 8Dn^4a + 4Fn^4a - 960n^4a - 16Dn^3a - 8Fn^3a + 2880n^3a - 8Dn^2a - 28Fn^2a + 768n^2a + 352Ga + 16Dna + 32Fna - 2304na - 192G',
    },
    'J8.II.c': {
        'a8': '(1 - x^2)^4',
        'a7': '-4 (6 + a - 6x + ax) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2)/(3(-36 + 60a - 25a^2 + a^4))) X6',
        'X6': '-19440 + 23976a - 108a^2 - 4770a^3 + 90a^4 + 234a^5 + 18a^6 - D + aD + F + 38880x - 66096ax + 27864a^2x + 1260a^3x - 1980a^4x + 36a^5x + 36a^6x - 19440x^2 + 39528ax^2 - 26028a^2x^2 + 6030a^3x^2 + 90a^4x^2 - 198a^5x^2 + 18a^6x^2 + Dx^2 - aDx^2 - Fx^2',
        'a5': '((-1 + x^2)/(-36 + 60a - 25a^2 + a^4)) X5',
        'X5': '17280 - 12960a - 11376a^2 + 6104a^3 + 1380a^4 - 340a^5 - 84a^6 - 4a^7 + 6D - 5aD - a^2D - 6F - aF - 51840x + 76896ax - 16272a^2x - 12648a^3x + 3420a^4x + 564a^5x - 108a^6x - 12a^7x - 4Dx + 5aDx - a^2Dx + 4Fx - aFx + 51840x^2 - 101088ax^2 + 59184a^2x^2 - 7608a^3x^2 - 3060a^4x^2 + 708a^5x^2 + 36a^6x^2 - 12a^7x^2 - 6Dx^2 + 5aDx^2 + a^2Dx^2 + 6Fx^2 + aFx^2 - 17280x^3 + 39456ax^3 - 31920a^2x^3 + 11144a^3x^3 - 1260a^4x^3 - 196a^5x^3 + 60a^6x^3 - 4a^7x^3 + 4Dx^3 - 5aDx^3 + a^2Dx^3 - 4Fx^3 + aFx^3',
        'a4': '((X4)/(2(-36 + 60a - 25a^2 + a^4)))',
        'X4': '-25920 - 8208a + 48744a^2 - 6300a^3 - 8902a^4 + 48a^5 + 476a^6 + 60a^7 + 2a^8 - 64D + 38aD + 24a^2D + 2a^3D + 70F + 21aF + 3a^2F + 103680x - 112320ax - 42336a^2x + 59376a^3x - 3928a^4x - 4800a^5x + 176a^6x + 144a^7x + 8a^8x + 72Dx - 84aDx + 8a^2Dx + 4a^3Dx - 72Fx + 12aFx + 4a^2Fx - 155520x^2 + 282528ax^2 - 125712a^2x^2 - 21672a^3x^2 + 22908a^4x^2 - 1728a^5x^2 - 888a^6x^2 + 72a^7x^2 + 12a^8x^2 + 40Dx^2 - 40a^2Dx^2 - 52Fx^2 - 30aFx^2 - 2a^2Fx^2 + 103680x^3 - 236736ax^3 + 185760a^2x^3 - 54672a^3x^3 - 1048a^4x^3 + 3456a^5x^3 - 400a^6x^3 - 48a^7x^3 + 8a^8x^3 - 72Dx^3 + 84aDx^3 - 8a^2Dx^3 - 4a^3Dx^3 + 72Fx^3 - 12aFx^3 - 4a^2Fx^3 - 25920x^4 + 67824ax^4 - 67608a^2x^4 + 32676a^3x^4 - 7462a^4x^4 + 336a^5x^4 + 188a^6x^4 - 36a^7x^4 + 2a^8x^4 + 24Dx^4 - 38aDx^4 + 16a^2Dx^4 - 2a^3Dx^4 - 18Fx^4 + 9aFx^4 - a^2Fx^4',
        'a3': '((X3)/(3(-36 + 60a - 25a^2 + a^4)))',
        'X3': '-156D + 40aD + 95a^2D + 20a^3D + a^4D + 264F + 44aF + 24a^2F + 4a^3F + 192Dx - 210aDx - 15a^2Dx + 30a^3Dx + 3a^4Dx - 228Fx + 66aFx + 12a^2Fx + 6a^3Fx - 108Dx^2 + 180aDx^2 - 75a^2Dx^2 + 3a^4Dx^2 + 24Dx^3 - 50aDx^3 + 35a^2Dx^3 - 10a^3Dx^3 + a^4Dx^3 + 12Fx^3 - 22aFx^3 + 12a^2Fx^3 - 2a^3Fx^3',
        'a2': '((X2)/(2a(-6+5a+a^2)))',
        'X2': '34aF + 13a^2F + a^3F - 12G + 10aG + 2a^2G - 12aFx + 10a^2Fx + 2a^3Fx + 2aFx^2 - 3a^2Fx^2 + a^3Fx^2 + 12Gx^2 - 10aGx^2 - 2a^2Gx^2',
        'a1': '((G(6+a+ax))/(a))',
        'lam': '((n(-a+n-1))/(6(a-3)(a-2)(a-1)a(a+6))) L',
        'L': '-6n^3a^8 + 36n^2a^8 - 66na^8 + 36a^8 + 18n^4a^7 - 90n^3a^7 + 90n^2a^7 + 90na^7 - 108a^7 -18n^5a^6 + 72n^4a^6 + 156n^3a^6 - 1116n^2a^6 + 1734na^6 - 828a^6 + 6n^6a^5 - 18n^5a^5 -480n^4a^5 + 1980n^3a^5 - 66n^2a^5 - 6282na^5 + 4860a^5 + 450n^5a^4 - 720n^4a^4 -5334n^3a^4 - 2Dn^2a^4 + 9504n^2a^4 - 4Da^4 + 3Fa^4 - 6Ga^4 + 6Dna^4 - 3Fna^4 +5676na^4 - 9576a^4 - 150n^6a^3 - 630n^5a^3 + 4422n^4a^3 + 4Dn^3a^3 + 1350n^3a^3 -8Dn^2a^3 + Fn^2a^3 - 16800n^2a^3 + 8Da^3 - 19Fa^3 - 4Dna^3 + 18Fna^3 + 3600na^3 +8208a^3 + 360n^6a^2 - 432n^5a^2 - 2Dn^4a^2 - 4392n^4a^2 + 4Fn^3a^2 + 5184n^3a^2 +12Dn^2a^2 - 25Fn^2a^2 + 9216n^2a^2 - 4Da^2 + 22Fa^2 + 150Ga^2 - 6Dna^2 - Fna^2 -7344na^2 - 2592a^2 - 216n^6a + 648n^5a + 2Dn^4a - 2Fn^4a + 1080n^4a - 4Dn^3a +4Fn^3a - 3240n^3a - 2Dn^2a + 20Fn^2a - 864n^2a - 360Ga + 4Dna - 22Fna +2592na + 216G',
    },
    'J8.II.d': {
        'a8': '(1 - x^2)^4',
        'a7': '-4 (8 + a - 6x + ax) (-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2)/(3(-48 + 82a - 37a^2 + 2a^3 + a^4))) X6',
        'X6': '-50112 + 70920a - 14400a^2 - 7758a^3 + 990a^4 + 342a^5 + 18a^6 - D + aD + F + 69120x - 123264ax + 60408a^2x - 3924a^3x - 2556a^4x + 180a^5x + 36a^6x - 25920x^2 + 53784ax^2 - 37080a^2x^2 + 9882a^3x^2 - 522a^4x^2 - 162a^5x^2 + 18a^6x^2 + Dx^2 - aDx^2 - Fx^2',
        'a5': '((-1 + x^2)/(-48 + 82a - 37a^2 + 2a^3 + a^4)) X5',
        'X5': '73728 - 87552a - 3584a^2 + 17864a^3 + 532a^4 - 868a^5 - 116a^6 - 4a^7 + 8D - 7aD - a^2D - 8F - aF - 133632x + 222528ax - 85680a^2x - 11088a^3x + 7812a^4x + 252a^5x - 180a^6x - 12a^7x - 4Dx + 5aDx - a^2Dx + 4Fx - aFx + 92160x^2 - 187392ax^2 + 121632a^2x^2 - 25368a^3x^2 - 2100a^4x^2 + 1092a^5x^2 - 12a^6x^2 - 12a^7x^2 - 8Dx^2 + 7aDx^2 + a^2Dx^2 + 8Fx^2 + aFx^2 - 23040x^3 + 53568ax^3 - 44912a^2x^3 + 17024a^3x^3 - 2660a^4x^3 - 28a^5x^3 + 52a^6x^3 - 4a^7x^3 + 4Dx^3 - 5aDx^3 + a^2Dx^3 - 4Fx^3 + aFx^3',
        'a4': '((X4)/(2(-48 + 82a - 37a^2 + 2a^3 + a^4)))',
        'X4': '-228096 + 202080a + 100952a^2 - 64120a^3 - 14966a^4 + 3080a^5 + 988a^6 + 80a^7 + 2a^8 - 120D + 86aD + 32a^2D + 2a^3D + 126F + 29aF + 3a^2F + 442368x - 672768ax + 153600a^2x + 114352a^3x - 32536a^4x - 6272a^5x + 1040a^6x + 208a^7x + 8a^8x + 96Dx - 116aDx + 16a^2Dx + 4a^3Dx - 96Fx + 20aFx + 4a^2Fx - 400896x^2 + 801216ax^2 - 479568a^2x^2 + 52416a^3x^2 + 34524a^4x^2 - 7056a^5x^2 - 792a^6x^2 + 144a^7x^2 + 12a^8x^2 + 96Dx^2 - 48aDx^2 - 48a^2Dx^2 - 108Fx^2 - 38aFx^2 - 2a^2Fx^2 + 184320x^3 - 436224ax^3 + 368192a^2x^3 - 131824a^3x^3 + 12712a^4x^3 + 3584a^5x^3 - 752a^6x^3 - 16a^7x^3 + 8a^8x^3 - 96Dx^3 + 116aDx^3 - 16a^2Dx^3 - 4a^3Dx^3 + 96Fx^3 - 20aFx^3 - 4a^2Fx^3 - 34560x^4 + 91872ax^4 - 94152a^2x^4 + 47992a^3x^4 - 12502a^4x^4 + 1288a^5x^4 + 92a^6x^4 - 32a^7x^4 + 2a^8x^4 + 24Dx^4 - 38aDx^4 + 16a^2Dx^4 - 2a^3Dx^4 - 18Fx^4 + 9aFx^4 - a^2Fx^4',
        'a3': '((X3)/(3(-48 + 82a - 37a^2 + 2a^3 + a^4)))',
        'X3': '-432D + 226aD + 179a^2D + 26a^3D + a^4D + 576F + 104aF + 36a^2F + 4a^3F + 360Dx - 438aDx + 33a^2Dx + 42a^3Dx + 3a^4Dx - 396Fx + 126aFx + 24a^2Fx + 6a^3Fx - 144Dx^2 + 246aDx^2 - 111a^2Dx^2 + 6a^3Dx^2 + 3a^4Dx^2 + 24Dx^3 - 50aDx^3 + 35a^2Dx^3 - 10a^3Dx^3 + a^4Dx^3 + 12Fx^3 - 22aFx^3 + 12a^2Fx^3 - 2a^3Fx^3',
        'a2': '((X2)/(2a(-8+7a+a^2)))',
        'X2': '62aF + 17a^2F + a^3F - 16G + 14aG + 2a^2G - 16aFx + 14a^2Fx + 2a^3Fx + 2aFx^2 - 3a^2Fx^2 + a^3Fx^2 + 16Gx^2 - 14aGx^2 - 2a^2Gx^2',
        'a1': '((G(8+a+ax))/(a))',
        'lam': '((n(-a+n-1))/(6(a-3)(a-2)(a-1)a(a+8))) L',
        'L': '-6n^3a^8 + 36n^2a^8 - 66na^8 + 36a^8 + 18n^4a^7 - 102n^3a^7 + 162n^2a^7 - 42na^7 - 36a^7 -18n^5a^6 + 108n^4a^6 + 48n^3a^6 - 1368n^2a^6 + 2706na^6 - 1476a^6 + 6n^6a^5 - 54n^5a^5 -552n^4a^5 + 2940n^3a^5 - 786n^2a^5 - 8646na^5 + 7092a^5 + 12n^6a^4 + 630n^5a^4 -1248n^4a^4 - 7134n^3a^4 - 2Dn^2a^4 + 13692n^2a^4 - 4Da^4 + 3Fa^4 - 6Ga^4 + 6Dna^4 -3Fna^4 + 7296na^4 - 13248a^4 - 222n^6a^3 - 810n^5a^3 + 6150n^4a^3 + 4Dn^3a^3 +1482n^3a^3 - 8Dn^2a^3 + Fn^2a^3 - 22920n^2a^3 + 8Da^3 - 19Fa^3 - 12Ga^3 - 4Dna^3 +18Fna^3 + 5232na^3 + 11088a^3 + 492n^6a^2 - 612n^5a^2 - 2Dn^4a^2 - 5916n^4a^2 +4Fn^3a^2 + 7092n^3a^2 + 12Dn^2a^2 - 25Fn^2a^2 + 12336n^2a^2 - 4Da^2 + 22Fa^2 +222Ga^2 - 6Dna^2 - Fna^2 - 9936na^2 - 3456a^2 - 288n^6a + 864n^5a + 2Dn^4a -2Fn^4a + 1440n^4a - 4Dn^3a + 4Fn^3a - 4320n^3a - 2Dn^2a + 20Fn^2a - 1152n^2a -492Ga + 4Dna - 2Fna + 3456na + 288G',
    },
    'J8.III.a': {
        'a8': '(1 - x^2)^4',
        'a7': '-4(-2 + a(-1 + x) - 6x)(-1 + x^2)^3',
        'a6': '- ((((-1 + x^2)^2)/((2 + a)(24 - 50a + 35a^2 - 10a^3 + a^4))) ) X6',
        'X6': '576 - 2352a + 2232a^2 + 36a^3 - 666a^4 + 162a^5 + 18a^6 - 6a^7 + 2D - aD - a^2D - 2F + aF - 5760x + 7392ax + 912a^2x - 3432a^3x + 660a^4x + 348a^5x - 132a^6x + 12a^7x - 8640x^2 + 16848ax^2 - 8904a^2x^2 - 924a^3x^2 + 2310a^4x^2 - 798a^5x^2 + 114a^6x^2 - 6a^7x^2 - 2Dx^2 + aDx^2 + a^2Dx^2 + 2Fx^2 - aFx^2',
        'a5': '- (((-1 + x^2)/((2 + a)(24 - 50a + 35a^2 - 10a^3 + a^4))) ) X5',
        'X5': '4608 - 7680a + 800a^2 + 3824a^3 - 1304a^4 - 460a^5 + 220a^6 - 4a^7 - 4a^8 + 12D - 9a^2D - 3a^3D - 12F + 3a^2F + 4608x - 19968ax + 22560a^2x - 4176a^3x - 5400a^4x + 2628a^5x - 180a^6x - 84a^7x + 12a^8x + 24Dx - 18aDx - 9a^2Dx + 3a^3Dx - 24Fx + 18aFx - 3a^2Fx - 23040x^2 + 35328ax^2 - 3744a^2x^2 - 14640a^3x^2 + 6072a^4x^2 + 732a^5x^2 - 876a^6x^2 + 180a^7x^2 - 12a^8x^2 - 12Dx^2 + 9a^2Dx^2 + 3a^3Dx^2 + 12Fx^2 - 3a^2Fx^2 - 23040x^3 + 50688ax^3 - 34976a^2x^3 + 3472a^3x^3 + 6776a^4x^3 - 3668a^5x^3 + 836a^6x^3 - 92a^7x^3 + 4a^8x^3 - 24Dx^3 + 18aDx^3 + 9a^2Dx^3 - 3a^3Dx^3 + 24Fx^3 - 18aFx^3 + 3a^2Fx^3',
        'a4': '((X4)/(2(2 + a)(24 - 50a + 35a^2 - 10a^3 + a^4)))',
        'X4': '-2304 - 4608a + 14320a^2 - 6312a^3 - 3308a^4 + 2426a^5 - 80a^6 - 148a^7 + 12a^8 + 2a^9 - 60aD + 18a^2D + 36a^3D + 6a^4D + 24F + 34aF - 9a^2F - 7a^3F - 27648x + 55296ax - 20160a^2x - 21344a^3x + 15472a^4x + 152a^5x - 2240a^6x + 464a^7x + 16a^8x - 8a^9x - 144Dx + 48aDx + 108a^2Dx - 12a^4Dx + 144Fx - 48aFx - 36a^2Fx + 12a^3Fx - 13824x^2 + 64512ax^2 - 87648a^2x^2 + 35088a^3x^2 + 12024a^4x^2 - 13284a^5x^2 + 3168a^6x^2 + 72a^7x^2 - 120a^8x^2 + 12a^9x^2 - 144Dx^2 + 216aDx^2 - 72a^3Dx^2 + 96Fx^2 - 164aFx^2 + 54a^2Fx^2 + 2a^3Fx^2 + 46080x^3 - 86016ax^3 + 31040a^2x^3 + 26784a^3x^3 - 21904a^4x^3 + 2584a^5x^3 + 2240a^6x^3 - 944a^7x^3 + 144a^8x^3 - 8a^9x^3 + 144Dx^3 - 48aDx^3 - 108a^2Dx^3 + 12a^4Dx^3 - 144Fx^3 + 48aFx^3 + 36a^2Fx^3 - 12a^3Fx^3 + 34560x^4 - 87552ax^4 + 77808a^2x^4 - 22696a^3x^4 - 8428a^4x^4 + 8890a^5x^4 - 3088a^6x^4 + 556a^7x^4 - 52a^8x^4 + 2a^9x^4 + 144Dx^4 - 156aDx^4 - 18a^2Dx^4 + 36a^3Dx^4 - 6a^4Dx^4 - 120Fx^4 + 130aFx^4 - 45a^2Fx^4 + 5a^3Fx^4',
        'a3': '((X3)/(48 - 76a + 20a^2 + 15a^3 - 8a^4 + a^5))',
        'X3': '-24D + 28aD + 22a^2D - 15a^3D - 10a^4D - a^5D - 24F - 2a^2F + 2a^4F + 60aDx - 48a^2Dx - 27a^3Dx + 12a^4Dx + 3a^5Dx - 48Fx + 16aFx + 4a^2Fx + 8a^3Fx - 4a^4Fx + 72Dx^2 - 60aDx^2 - 42a^2Dx^2 + 27a^3Dx^2 + 6a^4Dx^2 - 3a^5Dx^2 - 24Fx^2 + 32aFx^2 - 2a^2Fx^2 - 8a^3Fx^2 + 2a^4Fx^2 + 48Dx^3 - 76aDx^3 + 20a^2Dx^3 + 15a^3Dx^3 - 8a^4Dx^3 + a^5Dx^3',
        'a2': '((X2)/(2a(-2+a+a^2)))',
        'X2': '-2aF - 5a^2F - a^3F - 4G + 2aG + 2a^2G - 4aFx + 2a^2Fx + 2a^3Fx - 2aFx^2 + 3a^2Fx^2 - a^3Fx^2 + 4Gx^2 - 2aGx^2 - 2a^2Gx^2',
        'a1': '((G(-2+a(-1+x)))/(a))',
        'lam': '((n(-a+n-1))/(2(a-4)(a-3)(a-2)(a-1)a(a+2))) L',
        'L': '-2n^3a^9 + 12n^2a^9 - 22na^9 + 12a^9 + 6n^4a^8 - 14n^3a^8 - 66n^2a^8 + 206na^8 - 132a^8 - 6n^5a^7 - 24n^4a^7 + 212n^3a^7 - 132n^2a^7 - 542na^7 + 492a^7 + 2n^6a^6 + 42n^5a^6 - 112n^4a^6 - 476n^3a^6 + 1274n^2a^6 - 238na^6 - 492a^6 - 16n^6a^5 - 42n^5a^5 + 560n^4a^5 - 658n^3a^5 - 2Dn^2a^5 - 1456n^2a^5 - 4Da^5 - Fa^5 - 2Ga^5 + 6Dna^5 + Fna^5 + 2884na^5 - 1272a^5 + 30n^6a^4 - 210n^5a^4 - 126n^4a^4 + 4Dn^3a^4 + 2674n^3a^4 - 12Dn^2a^4 + Fn^2a^4 - 3024n^2a^4 + 13Fa^4 + 16Ga^4 + 8Dna^4 - 14Fna^4 - 3136na^4 + 3792a^4 + 40n^6a^3 + 336n^5a^3 - 2Dn^4a^3 - 1736n^4a^3 + 8Dn^3a^3 - 4Fn^3a^3 - 992n^3a^3 - 4Dn^2a^3 + 15Fn^2a^3 + 7072n^2a^3 + 12Da^3 - 38Fa^3 - 30Ga^3 - 14Dna^3 + 27Fna^3 - 1168na^3 - 3552a^3 - 152n^6a^2 + 168n^5a^2 - 2Dn^4a^2 + 2Fn^4a^2 + 1912n^4a^2 - 4Dn^3a^2 + 4Fn^3a^2 - 2184n^3a^2 + 22Dn^2a^2 - 48Fn^2a^2 - 4064n^2a^2 - 8Da^2 + 32Fa^2 - 40Ga^2 - 8Dna^2 + 10Fna^2 + 3168na^2 + 1152a^2 + 96n^6a - 288n^5a + 4Dn^4a - 4Fn^4a - 480n^4a - 8Dn^3a + 8Fn^3a + 1440n^3a - 4Dn^2a + 28Fn^2a + 384n^2a + 152Ga + 8Dna - 32Fna - 1152na - 96G',
    },
    'J8.III.b': {
        'a8': '(1 - x^2)^4',
        'a7': '-4(-4 + a(-1 + x) - 6x)(-1 + x^2)^3',
        'a6': '(((-1 + x^2)^2)/(-96 + 176a - 90a^2 + 5a^3 + 6a^4 - a^5)) X6',
        'X6': '-5760 + 5376a + 3528a^2 - 3504a^3 + 90a^4 + 294a^5 - 18a^6 - 6a^7 + 4D - 3aD - a^2D - 2F + aF - 23040x + 41088ax - 18336a^2x - 1992a^3x + 2580a^4x - 228a^5x - 84a^6x + 12a^7x - 17280x^2 + 38016ax^2 - 28392a^2x^2 + 7896a^3x^2 + 210a^4x^2 - 546a^5x^2 + 102a^6x^2 - 6a^7x^2 - 4Dx^2 + 3aDx^2 + a^2Dx^2 + 2Fx^2 - aFx^2',
        'a5': '((-1 + x^2)/(-96 + 176a - 90a^2 + 5a^3 + 6a^4 - a^5)) X5',
        'X5': '-16896a + 25216a^2 - 5664a^3 - 3816a^4 + 996a^5 + 204a^6 - 36a^7 - 4a^8 + 48D - 24aD - 21a^2D - 3a^3D - 24F + 6aF + 3a^2F - 46080x + 54528ax + 17472a^2x - 35088a^3x + 7728a^4x + 2172a^5x - 732a^6x - 12a^7x + 12a^8x + 48Dx - 48aDx - 3a^2Dx + 3a^3Dx - 24Fx + 18aFx - 3a^2Fx - 92160x^2 + 187392ax^2 - 114432a^2x^2 + 10368a^3x^2 + 12312a^4x^2 - 3492a^5x^2 - 108a^6x^2 + 132a^7x^2 - 12a^8x^2 - 48Dx^2 + 24aDx^2 + 21a^2Dx^2 + 3a^3Dx^2 + 24Fx^2 - 6aFx^2 - 3a^2Fx^2 - 46080x^3 + 112896ax^3 - 101056a^2x^3 + 39984a^3x^3 - 4704a^4x^3 - 1596a^5x^3 + 636a^6x^3 - 84a^7x^3 + 4a^8x^3 - 48Dx^3 + 48aDx^3 + 3a^2Dx^3 - 3a^3Dx^3 + 24Fx^3 - 18aFx^3 + 3a^2Fx^3',
        'a4': '((X4)/(2(-96 + 176a - 90a^2 + 5a^3 + 6a^4 - a^5)))',
        'X4': '23040 - 61056a + 33248a^2 + 18824a^3 - 14328a^4 - 1002a^5 + 1272a^6 + 36a^7 - 32a^8 - 2a^9 + 288D - 210a^2D - 72a^3D - 6a^4D - 168F - 10aF + 33a^2F + 7a^3F - 101376ax + 185088a^2x - 84416a^3x - 11568a^4x + 13608a^5x - 768a^6x - 624a^7x + 48a^8x + 8a^9x + 576Dx - 480aDx - 156a^2Dx + 48a^3Dx + 12a^4Dx - 288Fx + 168aFx + 12a^2Fx - 12a^3Fx - 138240x^2 + 209664ax^2 - 2112a^2x^2 - 122736a^3x^2 + 58272a^4x^2 - 1212a^5x^2 - 4368a^6x^2 + 696a^7x^2 + 48a^8x^2 - 12a^9x^2 - 384aDx^2 + 288a^2Dx^2 + 96a^3Dx^2 + 48Fx^2 + 140aFx^2 - 78a^2Fx^2 - 2a^3Fx^2 - 184320x^3 + 436224ax^3 - 353792a^2x^3 + 97024a^3x^3 + 17712a^4x^3 - 15192a^5x^3 + 2112a^6x^3 + 336a^7x^3 - 112a^8x^3 + 8a^9x^3 - 576Dx^3 + 480aDx^3 + 156a^2Dx^3 - 48a^3Dx^3 - 12a^4Dx^3 + 288Fx^3 - 168aFx^3 - 12a^2Fx^3 + 12a^3Fx^3 - 69120x^4 + 192384ax^4 - 208032a^2x^4 + 110504a^3x^4 - 27048a^4x^4 - 42a^5x^4 + 1752a^6x^4 - 444a^7x^4 + 48a^8x^4 - 2a^9x^4 - 288Dx^4 + 384aDx^4 - 78a^2Dx^4 - 24a^3Dx^4 + 6a^4Dx^4 + 120Fx^4 - 130aFx^4 + 45a^2Fx^4 - 5a^3Fx^4',
        'a3': '((X3)/(96 - 176a + 90a^2 - 5a^3 - 6a^4 + a^5))',
        'X3': '96D + 128aD - 114a^2D - 91a^3D - 18a^4D - a^5D - 144F + 4aF + 10a^2F + 8a^3F + 2a^4F + 288Dx - 144aDx - 210a^2Dx + 33a^3Dx + 30a^4Dx + 3a^5Dx - 192Fx + 112aFx + 16a^2Fx - 4a^3Fx - 4a^4Fx + 288Dx^2 - 384aDx^2 + 42a^2Dx^2 + 63a^3Dx^2 - 6a^4Dx^2 - 3a^5Dx^2 - 48Fx^2 + 76aFx^2 - 26a^2Fx^2 - 4a^3Fx^2 + 2a^4Fx^2 + 96Dx^3 - 176aDx^3 + 90a^2Dx^3 - 5a^3Dx^3 - 6a^4Dx^3 + a^5Dx^3',
        'a2': '((X2)/(2a(-4+3a+a^2)))',
        'X2': '-14aF - 9a^2F - a^3F - 8G + 6aG + 2a^2G - 8aFx + 6a^2Fx + 2a^3Fx - 2aFx^2 + 3a^2Fx^2 - a^3Fx^2 + 8Gx^2 - 6aGx^2 - 2a^2Gx^2',
        'a1': '((G(-4+a(-1+x)))/(a))',
        'lam': '((n(-a+n-1))/(2(a-4)(a-3)(a-2)(a-1)a(a+4))) L',
        'L': '-2n^3a^9 + 12n^2a^9 - 22na^9 + 12a^9 + 6n^4a^8 - 18n^3a^8 - 42n^2a^8 + 162na^8 - 108a^8 -6n^5a^7 - 12n^4a^7 + 192n^3a^7 - 312n^2a^7 - 42na^7 + 180a^7 + 2n^6a^6 + 30n^5a^6 -184n^4a^6 - 12n^3a^6 + 1370n^2a^6 - 2322na^6 + 1116a^6 - 12n^6a^5 + 66n^5a^5 +480n^4a^5 - 2538n^3a^5 - 2Dn^2a^5 + 900n^2a^5 - 4Da^5 - Fa^5 - 2Ga^5 + 6Dna^5 +Fna^5 + 6576na^5 - 5472a^5 - 10n^6a^4 - 510n^5a^4 + 1154n^4a^4 + 4Dn^3a^4 +5118n^3a^4 - 16Dn^2a^4 + Fn^2a^4 - 10648n^2a^4 - 8Da^4 + 13Fa^4 + 12Ga^4 +20Dna^4 - 14Fna^4 - 4752na^4 + 9648a^4 + 180n^6a^3 + 516n^5a^3 - 2Dn^4a^3 -4548n^4a^3 + 16Dn^3a^3 - 4Fn^3a^3 - 532n^3a^3 - 20Dn^2a^3 + 15Fn^2a^3 + 16272n^2a^3 +28Da^3 - 38Fa^3 + 10Ga^3 - 22Dna^3 + 27Fna^3 - 4208na^3 - 7680a^3 - 352n^6a^2 +480n^5a^2 - 6Dn^4a^2 + 2Fn^4a^2 + 4064n^4a^2 - 4Dn^3a^2 + 4Fn^3a^2 - 5088n^3a^2 +46Dn^2a^2 - 48Fn^2a^2 - 8320n^2a^2 - 16Da^2 + 32Fa^2 - 180Ga^2 - 20Dna^2 +10Fna^2 + 6912na^2 + 2304a^2 + 192n^6a - 576n^5a + 8Dn^4a - 4Fn^4a - 960n^4a -16Dn^3a + 8Fn^3a + 2880n^3a - 8Dn^2a + 28Fn^2a + 768n^2a + 352Ga + 16Dna -32Fna - 2304na - 192G',
    },
    'J8.III.c': {
        'a8': '(1 - x^2)^4',
        'a7': '-4(-1 + x^2)^3 (a(-1 + x) - 6(1 + x))',
        'a6': '(((-1 + x^2)^2)/(3(-36 + 60a - 25a^2 + a^4))) X6',
        'X6': '-19440 + 23976a - 108a^2 - 4770a^3 + 90a^4 + 234a^5 + 18a^6 + D - aD - F - 38880x + 66096ax - 27864a^2x - 1260a^3x + 1980a^4x - 36a^5x - 36a^6x - 19440x^2 + 39528ax^2 - 26028a^2x^2 + 6030a^3x^2 + 90a^4x^2 - 198a^5x^2 + 18a^6x^2 - Dx^2 + aDx^2 + Fx^2',
        'a5': '- (((-1 + x^2)/(-36 + 60a - 25a^2 + a^4)) ) X5',
        'X5': '17280 - 12960a - 11376a^2 + 6104a^3 + 1380a^4 - 340a^5 - 84a^6 - 4a^7 - 6D + 5aD + a^2D + 6F + aF + 51840x - 76896ax + 16272a^2x + 12648a^3x - 3420a^4x - 564a^5x + 108a^6x + 12a^7x - 4Dx + 5aDx - a^2Dx + 4Fx - aFx + 51840x^2 - 101088ax^2 + 59184a^2x^2 - 7608a^3x^2 - 3060a^4x^2 + 708a^5x^2 + 36a^6x^2 - 12a^7x^2 + 6Dx^2 - 5aDx^2 - a^2Dx^2 - 6Fx^2 - aFx^2 + 17280x^3 - 39456ax^3 + 31920a^2x^3 - 11144a^3x^3 + 1260a^4x^3 + 196a^5x^3 - 60a^6x^3 + 4a^7x^3 + 4Dx^3 - 5aDx^3 + a^2Dx^3 - 4Fx^3 + aFx^3',
        'a4': '((X4)/(2(-36 + 60a - 25a^2 + a^4)))',
        'X4': '-25920 - 8208a + 48744a^2 - 6300a^3 - 8902a^4 + 48a^5 + 476a^6 + 60a^7 + 2a^8 + 64D - 38aD - 24a^2D - 2a^3D - 70F - 21aF - 3a^2F - 103680x + 112320ax + 42336a^2x - 59376a^3x + 3928a^4x + 4800a^5x - 176a^6x - 144a^7x - 8a^8x + 72Dx - 84aDx + 8a^2Dx + 4a^3Dx - 72Fx + 12aFx + 4a^2Fx - 155520x^2 + 282528ax^2 - 125712a^2x^2 - 21672a^3x^2 + 22908a^4x^2 - 1728a^5x^2 - 888a^6x^2 + 72a^7x^2 + 12a^8x^2 - 40Dx^2 + 40a^2Dx^2 + 52Fx^2 + 30aFx^2 + 2a^2Fx^2 - 103680x^3 + 236736ax^3 - 185760a^2x^3 + 54672a^3x^3 + 1048a^4x^3 - 3456a^5x^3 + 400a^6x^3 + 48a^7x^3 - 8a^8x^3 - 72Dx^3 + 84aDx^3 - 8a^2Dx^3 - 4a^3Dx^3 + 72Fx^3 - 12aFx^3 - 4a^2Fx^3 - 25920x^4 + 67824ax^4 - 67608a^2x^4 + 32676a^3x^4 - 7462a^4x^4 + 336a^5x^4 + 188a^6x^4 - 36a^7x^4 + 2a^8x^4 - 24Dx^4 + 38aDx^4 - 16a^2Dx^4 + 2a^3Dx^4 + 18Fx^4 - 9aFx^4 + a^2Fx^4',
        'a3': '((X3)/(3(-36 + 60a - 25a^2 + a^4)))',
        'X3': '-156D + 40aD + 95a^2D + 20a^3D + a^4D + 264F + 44aF + 24a^2F + 4a^3F - 192Dx + 210aDx + 15a^2Dx - 30a^3Dx - 3a^4Dx + 228Fx - 66aFx - 12a^2Fx - 6a^3Fx - 108Dx^2 + 180aDx^2 - 75a^2Dx^2 + 3a^4Dx^2 - 24Dx^3 + 50aDx^3 - 35a^2Dx^3 + 10a^3Dx^3 - a^4Dx^3 - 12Fx^3 + 22aFx^3 - 12a^2Fx^3 + 2a^3Fx^3',
        'a2': '((X2)/(2a(-6+5a+a^2)))',
        'X2': '-34aF - 13a^2F - a^3F - 12G + 10aG + 2a^2G - 12aFx + 10a^2Fx + 2a^3Fx - 2aFx^2 + 3a^2Fx^2 - a^3Fx^2 + 12Gx^2 - 10aGx^2 - 2a^2Gx^2',
        'a1': '((G(-6+a(-1+x)))/(a))',
        'lam': '((n(-a+n-1))/(6(a-3)(a-2)(a-1)a(a+6))) L',
        'L': '-6n^3a^8 + 36n^2a^8 - 66na^8 + 36a^8 + 18n^4a^7 - 90n^3a^7 + 90n^2a^7 + 90na^7 - 108a^7 -18n^5a^6 + 72n^4a^6 + 156n^3a^6 - 1116n^2a^6 + 1734na^6 - 828a^6 + 6n^6a^5 - 18n^5a^5 -480n^4a^5 + 1980n^3a^5 - 66n^2a^5 - 6282na^5 + 4860a^5 + 450n^5a^4 - 720n^4a^4 -5334n^3a^4 + 2Dn^2a^4 + 9504n^2a^4 + 4Da^4 - 3Fa^4 - 6Ga^4 - 6Dna^4 + 3Fna^4 +5676na^4 - 9576a^4 - 150n^6a^3 - 630n^5a^3 + 4422n^4a^3 - 4Dn^3a^3 + 1350n^3a^3 +8Dn^2a^3 - Fn^2a^3 - 16800n^2a^3 - 8Da^3 + 19Fa^3 + 4Dna^3 - 18Fna^3 + 3600na^3 +8208a^3 + 360n^6a^2 - 432n^5a^2 + 2Dn^4a^2 - 4392n^4a^2 - 4Fn^3a^2 + 5184n^3a^2 -12Dn^2a^2 + 25Fn^2a^2 + 9216n^2a^2 + 4Da^2 - 22Fa^2 + 150Ga^2 + 6Dna^2 + Fna^2 -7344na^2 - 2592a^2 - 216n^6a + 648n^5a - 2Dn^4a + 2Fn^4a + 1080n^4a + 4Dn^3a -4Fn^3a - 3240n^3a + 2Dn^2a - 20Fn^2a - 864n^2a - 360Ga - 4Dna + 22Fna +2592na + 216G',
    },
    'J8.III.d': {
        'a8': '(1 - x^2)^4',
        'a7': '-4 (-8 + a (-1 + x) - 6x) (-1 + x^2)^3',
        'a6': '((-(-1 + x^2)^2)/(3 (-48 + 82a - 37a^2 + 2a^3 + a^4))) X6',
        'X6': '50112 - 70920a + 14400a^2 + 7758a^3 - 990a^4 - 342a^5 - 18a^6 - D + aD + F + 69120x - 123264ax + 60408a^2x - 3924a^3x - 2556a^4x + 180a^5x + 36a^6x + 25920x^2 - 53784ax^2 + 37080a^2x^2 - 9882a^3x^2 + 522a^4x^2 + 162a^5x^2 - 18a^6x^2 + Dx^2 - aDx^2 - Fx^2',
        'a5': '- (((-1 + x^2)/(-48 + 82a - 37a^2 + 2a^3 + a^4)) ) X5',
        'X5': '73728 - 87552a - 3584a^2 + 17864a^3 + 532a^4 - 868a^5 - 116a^6 - 4a^7 - 8D + 7aD + a^2D + 8F + aF + 133632x - 222528ax + 85680a^2x + 11088a^3x - 7812a^4x - 252a^5x + 180a^6x + 12a^7x - 4Dx + 5aDx - a^2Dx + 4Fx - aFx + 92160x^2 - 187392ax^2 + 121632a^2x^2 - 25368a^3x^2 - 2100a^4x^2 + 1092a^5x^2 - 12a^6x^2 - 12a^7x^2 + 8Dx^2 - 7aDx^2 - a^2Dx^2 - 8Fx^2 - aFx^2 + 23040x^3 - 53568ax^3 + 44912a^2x^3 - 17024a^3x^3 + 2660a^4x^3 + 28a^5x^3 - 52a^6x^3 + 4a^7x^3 + 4Dx^3 - 5aDx^3 + a^2Dx^3 - 4Fx^3 + aFx^3',
        'a4': '((X4)/(2 (-48 + 82a - 37a^2 + 2a^3 + a^4)))',
        'X4': '-228096 + 202080a + 100952a^2 - 64120a^3 - 14966a^4 + 3080a^5 + 988a^6 + 80a^7 + 2a^8 + 120D - 86aD - 32a^2D - 2a^3D - 126F - 29aF - 3a^2F - 442368x + 672768ax - 153600a^2x - 114352a^3x + 32536a^4x + 6272a^5x - 1040a^6x - 208a^7x - 8a^8x + 96Dx - 116aDx + 16a^2Dx + 4a^3Dx - 96Fx + 20aFx + 4a^2Fx - 400896x^2 + 801216ax^2 - 479568a^2x^2 + 52416a^3x^2 + 34524a^4x^2 - 7056a^5x^2 - 792a^6x^2 + 144a^7x^2 + 12a^8x^2 - 96Dx^2 + 48aDx^2 + 48a^2Dx^2 + 108Fx^2 + 38aFx^2 + 2a^2Fx^2 - 184320x^3 + 436224ax^3 - 368192a^2x^3 + 131824a^3x^3 - 12712a^4x^3 - 3584a^5x^3 + 752a^6x^3 + 16a^7x^3 - 8a^8x^3 - 96Dx^3 + 116aDx^3 - 16a^2Dx^3 - 4a^3Dx^3 + 96Fx^3 - 20aFx^3 - 4a^2Fx^3 - 34560x^4 + 91872ax^4 - 94152a^2x^4 + 47992a^3x^4 - 12502a^4x^4 + 1288a^5x^4 + 92a^6x^4 - 32a^7x^4 + 2a^8x^4 - 24Dx^4 + 38aDx^4 - 16a^2Dx^4 + 2a^3Dx^4 + 18Fx^4 - 9aFx^4 + a^2Fx^4',
        'a3': '((X3)/(3 (-48 + 82a - 37a^2 + 2a^3 + a^4)))',
        'X3': '-432D + 226aD + 179a^2D + 26a^3D + a^4D + 576F + 104aF + 36a^2F + 4a^3F - 360Dx + 438aDx - 33a^2Dx - 42a^3Dx - 3a^4Dx + 396Fx - 126aFx - 24a^2Fx - 6a^3Fx - 144Dx^2 + 246aDx^2 - 111a^2Dx^2 + 6a^3Dx^2 + 3a^4Dx^2 - 24Dx^3 + 50aDx^3 - 35a^2Dx^3 + 10a^3Dx^3 - a^4Dx^3 - 12Fx^3 + 22aFx^3 - 12a^2Fx^3 + 2a^3Fx^3',
        'a2': '((X2)/(2a(-8+7a+a^2)))',
        'X2': '-62aF - 17a^2F - a^3F - 16G + 14aG + 2a^2G - 16aFx + 14a^2Fx + 2a^3Fx - 2aFx^2 + 3a^2Fx^2 - a^3Fx^2 + 16Gx^2 - 14aGx^2 - 2a^2Gx^2',
        'a1': '((G(-8+a(-1+x)))/(a))',
        'lam': '((n(-a+n-1))/(6(a-3)(a-2)(a-1)a(a+8))) L',
        'L': '-6n^3a^8 + 36n^2a^8 - 66na^8 + 36a^8 + 18n^4a^7 - 102n^3a^7 + 162n^2a^7 - 42na^7 - 36a^7 -18n^5a^6 + 108n^4a^6 + 48n^3a^6 - 1368n^2a^6 + 2706na^6 - 1476a^6 + 6n^6a^5 - 54n^5a^5 -552n^4a^5 + 2940n^3a^5 - 786n^2a^5 - 8646na^5 + 7092a^5 + 12n^6a^4 + 630n^5a^4 -1248n^4a^4 - 7134n^3a^4 + 2Dn^2a^4 + 13692n^2a^4 + 4Da^4 - 3Fa^4 - 6Ga^4 - 6Dna^4 + 3Fna^4 + 7296na^4 - 13248a^4 - 222n^6a^3 - 810n^5a^3 + 6150n^4a^3 - 4Dn^3a^3 + 1482n^3a^3 + 8Dn^2a^3 - Fn^2a^3 - 22920n^2a^3 - 8Da^3 + 19Fa^3 - 12Ga^3 + 4Dna^3 -18Fna^3 + 5232na^3 + 11088a^3 + 492n^6a^2 - 612n^5a^2 + 2Dn^4a^2 - 5916n^4a^2 -4Fn^3a^2 + 7092n^3a^2 - 12Dn^2a^2 + 25Fn^2a^2 + 12336n^2a^2 + 4Da^2 - 22Fa^2 + 222Ga^2 + 6Dna^2 + Fna^2 - 9936na^2 - 3456a^2 - 288n^6a + 864n^5a - 2Dn^4a + 2Fn^4a + 1440n^4a + 4Dn^3a - 4Fn^3a - 4320n^3a + 2Dn^2a - 20Fn^2a - 1152n^2a -492Ga - 4Dna + 22Fna + 3456na + 288G',
    },
    'J8.IV': {
        'a8': '(1-x^2)^4',
        'a7': '-4(b + (-6+a)x)(-1+x^2)^3',
        'a6': '(((-1+x^2)^2)/(a(24-50a+35a^2-10a^3+a^4))) X6',
        'X6': '-864a + 1944a^2 - 1560a^3 + 570a^4 - 96a^5 + 6a^6 + 144ab^2 - 300a^2b^2 + 210a^3b^2 - 60a^4b^2 + 6a^5b^2 - aD + a^2D + 2aF + 2G - 1440abx + 3288a^2bx - 2700a^3bx + 1020a^4bx - 180a^5bx + 12a^6bx + 4320ax^2 - 10584a^2x^2 + 9744a^3x^2 - 4410a^4x^2 + 1050a^5x^2 - 126a^6x^2 + 6a^7x^2 + aDx^2 - a^2Dx^2 - 2aFx^2 - 2Gx^2',
        'a5': '-(((-1+x^2)/(a(24-50a+35a^2-10a^3+a^4)))) X5',
        'X5': '-1536ab + 3488a^2b - 2840a^3b + 1060a^4b - 184a^5b + 12a^6b + 96ab^3 - 200a^2b^3 + 140a^3b^3 - 40a^4b^3 + 4a^5b^3 - 3abD + 3a^2bD + 6abF + 6bG + 6912ax - 17280a^2x + 16368a^3x - 7680a^4x + 1908a^5x - 240a^6x + 12a^7x - 1152ab^2x + 2688a^2b^2x - 2280a^3b^2x + 900a^4b^2x - 168a^5b^2x + 12a^6b^2x + 12aDx - 15a^2Dx + 3a^3Dx - 24aFx + 6a^2Fx - 24Gx + 6aGx + 5760abx^2 - 14592a^2bx^2 + 14088a^3bx^2 - 6780a^4bx^2 + 1740a^5bx^2 - 228a^6bx^2 + 12a^7bx^2 + 3abDx^2 - 3a^2bDx^2 - 6abFx^2 - 6bGx^2 - 11520ax^3 + 31104a^2x^3 - 33040a^3x^3 + 18256a^4x^3 - 5740a^5x^3 + 1036a^6x^3 - 100a^7x^3 + 4a^8x^3 - 12aDx^3 + 15a^2Dx^3 - 3a^3Dx^3 + 24aFx^3 - 6a^2Fx^3 + 24Gx^3 - 6aGx^3',
        'a4': '((X4)/(a(24-50a+35a^2-10a^3+a^4)))',
        'X4': '1728a - 4320a^2 + 4092a^3 - 1920a^4 + 477a^5 - 60a^6 + 3a^7 - 672ab^2 + 1544a^2b^2 - 1280a^3b^2 + 490a^4b^2 - 88a^5b^2 + 6a^6b^2 + 24ab^4 - 50a^2b^4 + 35a^3b^4 - 10a^4b^4 + a^5b^4 + 12aD - 15a^2D + 3a^3D - 3ab^2D + 3a^2b^2D - 12aF - a^2F + a^3F + 6ab^2F - 12G - aG + a^2G + 6b^2G + 4608abx - 12000a^2bx + 12008a^3bx - 6020a^4bx + 1612a^5bx - 220a^6bx + 12a^7bx - 288ab^3x + 696a^2b^3x - 620a^3b^3x + 260a^4b^3x - 52a^5b^3x + 4a^6b^3x + 18abDx - 24a^2bDx + 6a^3bDx - 36abFx + 12a^2bFx - 36bGx + 12abGx - 10368ax^2 + 29376a^2x^2 - 33192a^3x^2 + 19704a^4x^2 - 6702a^5x^2 + 1314a^6x^2 - 138a^7x^2 + 6a^8x^2 + 1728ab^2x^2 - 4608a^2b^2x^2 + 4764a^3b^2x^2 - 2490a^4b^2x^2 + 702a^5b^2x^2 - 102a^6b^2x^2 + 6a^7b^2x^2 - 48aDx^2 + 72a^2Dx^2 - 27a^3Dx^2 + 3a^4Dx^2 + 3ab^2Dx^2 - 3a^2b^2Dx^2 + 72aFx^2 - 34a^2Fx^2 + 4a^3Fx^2 - 6ab^2Fx^2 + 72Gx^2 - 34aGx^2 + 4a^2Gx^2 - 6b^2Gx^2 - 5760abx^3 + 16512a^2bx^3 - 18952a^3bx^3 + 11476a^4bx^3 - 4000a^5bx^3 + 808a^6bx^3 - 88a^7bx^3 + 4a^8bx^3 - 18abDx^3 + 24a^2bDx^3 - 6a^3bDx^3 + 36abFx^3 - 12a^2bFx^3 + 36bGx^3 - 12abGx^3 + 8640ax^4 - 26208a^2x^4 + 32556a^3x^4 - 21952a^4x^4 + 8869a^5x^4 - 2212a^6x^4 + 334a^7x^4 - 28a^8x^4 + a^9x^4 + 36aDx^4 - 57a^2Dx^4 + 24a^3Dx^4 - 3a^4Dx^4 - 60aFx^4 + 35a^2Fx^4 - 5a^3Fx^4 - 60Gx^4 + 35aGx^4 - 5a^2Gx^4',
        'a3': '((X3)/(a(24 - 50a + 35a^2 - 10a^3 + a^4)))',
        'X3': '10abD - 13a^2bD + 3a^3bD - ab^3D + a^2b^3D + 4abF - 8a^2bF + 2a^3bF + 2ab^3F + 4bG - 8abG + 2a^2bG + 2b^3G - 24aDx + 42a^2Dx - 21a^3Dx + 3a^4Dx + 6ab^2Dx - 9a^2b^2Dx + 3a^3b^2Dx + 16a^2Fx - 12a^3Fx + 2a^4Fx - 12ab^2Fx + 6a^2b^2Fx + 16aGx - 12a^2Gx + 2a^3Gx - 12b^2Gx + 6ab^2Gx - 18abDx^2 + 33a^2bDx^2 - 18a^3bDx^2 + 3a^4bDx^2 + 12abFx^2 - 16a^2bFx^2 + 4a^3bFx^2 + 12bGx^2 - 16abGx^2 + 4a^2bGx^2 + 24aDx^3 - 50a^2Dx^3 + 35a^3Dx^3 - 10a^4Dx^3 + a^5Dx^3',
        'a2': '((X2)/(a(2 - 3a + a^2)))',
        'X2': '-2aF + a^2F + ab^2F - 2aG + a^2G + b^2G - 2abFx + 2a^2bFx - 2bGx + 2abGx + 2aFx^2 - 3a^2Fx^2 + a^3Fx^2',
        'a1': '((G(b + ax))/(a))',
        'lam': '((n(-a + n - 1))/((a - 4)(a - 3)(a - 2)(a - 1)a)) L',
        'L': '-n^3a^8 + 6n^2a^8 - 11na^8 + 6a^8 + 3n^4a^7 - 5n^3a^7 - 45n^2a^7 + 125na^7 - 78a^7 - 3n^5a^6 - 18n^4a^6 + 116n^3a^6 + 24n^2a^6 - 521na^6 + 402a^6 + n^6a^5 + 27n^5a^5 - 20n^4a^5 - 470n^3a^5 + 589n^2a^5 + 923na^5 - 1050a^5 - 10n^6a^4 - 75n^5a^4 + 320n^4a^4 + 611n^3a^4 - Dn^2a^4 - 1906n^2a^4 - 2Da^4 + Fa^4 - Ga^4 + 3Dna^4 - Fna^4 - 404na^4 + 1464a^4 + 35n^6a^3 + 45n^5a^3 - 703n^4a^3 + 2Dn^3a^3 + 115n^3a^3 - 4Dn^2a^3 - Fn^2a^3 + 2300n^2a^3 + 4Da^3 - 11Fa^3 + 11Ga^3 - 2Dna^3 + 12Fna^3 - Gna^3 - 760na^3 - 1032a^3 - 50n^6a^2 + 78n^5a^2 - Dn^4a^2 + 538n^4a^2 + 4Fn^3a^2 - 726n^3a^2 + 6Dn^2a^2 - 17Fn^2a^2 - Gn^2a^2 - 1064n^2a^2 - 2Da^2 + 16Fa^2 - 46Ga^2 - 3Dna^2 - 3Fna^2 + 12Gna^2 + 936na^2 + 288a^2 + 24n^6a - 72n^5a + Dn^4a - 2Fn^4a - 120n^4a - 2Dn^3a + 4Fn^3a + 4Gn^3a + 360n^3a - Dn^2a + 14Fn^2a - 17Gn^2a + 96n^2a + 66Ga + 2Dna - 16Fna - 3Gna - 288na - 2Gn^4 + 4Gn^3 + 14Gn^2 - 24G - 16Gn',
    },
    'L4': {
        'a4': 'x^2',
        'a3': 'x(a + bx)',
        'a2': '((1)/(4))(-2a + a^2 + x(4A + b^2x))',
        'a1': '((1)/(4))(2A - ab)(-2 + a + bx)',
        'lam': '((b)/(4))n(2A - ab - b + bn)',
    },
    'L6': {
        'a6': 'x^3',
        'a5': 'x^2(a + bx)',
        'a4': '((1)/(3))x(-3a + a^2 + x(3A + b^2x))',
        'a3': '((1)/(27))(a^3 - 9a^2(1 + bx) + 9a(2 + 2Ax + 3bx - b^2x^2) + x(b^3x^2 + 18A(-3 + bx)))',
        'a2': '((1)/(27))(18a^2b - 2a^3b + 27Cx - 2ab(18 + b^2x^2) + 3A(18 - 9a + a^2 + b^2x^2))',
        'a1': '((1)/(81))(-6(-3 + a)Ab - 12ab^2 + 4a^2b^2 + 27C)(-6 + a + bx)',
        'lam': '((b)/(81))n(4a^2b^2 + 3n^2b^2 - 6ab^2 - 6anb^2 - 9nb^2 + 6b^2 - 6aAb + 9Ab + 9Anb + 27C)',
    },
    'L8': {
        'a8': 'x^4',
        'a7': 'x^3 (a + bx)',
        'a6': '((x^2 (-12a + 3a^2 + x(8A + 3b^2x)))/(8))',
        'a5': '((x(a^3 - 6a^2(2 + bx) + 2a(16 + 6Ax + 12bx - 3b^2x^2) + x(b^3x^2 + 12A(-4 + bx))))/(16))',
        'a4': '((X4)/(256))',
        'X4': 'a^4 - 8a^3(3 + 4bx) + 16a^2(11 + 3Ax + 24bx) - 32a(12 + 18Ax + 32bx + b^3x^3) + x(256Cx + b^4x^3 + 48A(32 + b^2x^2))',
        'a3': '((X3)/(256))',
        'X3': '-3a^4b + 128Cx(-8 + bx) + 24a^3b(3 + bx) + 24a^2b(-22 - 12bx + b^2x^2) + a(1152b + 768b^2x + 128Cx - 96b^3x^2 - 3b^4x^3) + 4A(-384 + a^3 - 288bx + 36b^2x^2 + b^3x^3 - 3a^2(8 + 3bx) + a(176 + 108bx - 9b^2x^2))',
        'a2': '((X2)/(2048))',
        'X2': '-48(-384 + 176a - 24a^2 + a^3)Ab + 33a(-384 + 176a - 24a^2 + a^3)b^2 + 128(96 - 20a + a^2)C + 2048Fx + b^2(-48(-4 + a)Ab - 132ab^2 + 33a^2b^2 + 128C)x^2',
        'a1': '(((-12 + a + bx)/(4096)) ) X1',
        'X1': '48(32 - 12a + a^2)Ab^2 + 396a^2b^3 - 33a^3b^3 - 32a(33b^3 + 4bC) + 1024(bC + F)',
        'lam': '((bn)/(4096))L',
        'L': '-33a^3b^3 + 16n^3b^3 + 330a^2b^3 - 48an^2b^3 - 96n^2b^3 - 888ab^3 + 66a^2nb^3 - 120anb^3 + 176nb^3 - 96b^3 + 64An^2b^2 + 48a^2Ab^2 - 480aAb^2 + 1280Ab^2 - 96aAnb^2 + 192Anb^2 - 128aCb + 768Cb + 256Cnb + 1024F',
    },
}

# Printed coefficient lists of named special cases, in display order.
SPECIAL_COEFFS = {
    'H4': [
        {
            'a4': '1',
            'a3': '-4x',
            'a2': '4(x^2 - 1)',
            'a1': '4x',
        },
    ],
    'H6': [
        {
            'a6': '1',
            'a5': '-6x',
            'a4': '12x^2 - 12',
            'a3': '36x - 8x^3',
            'a2': '16 - 24x^2',
            'a1': '-8x',
        },
    ],
    'H8': [
        {
            'a8': '1',
            'a7': '-8x',
            'a6': '24x^2 - 24',
            'a5': '120x - 32x^3',
            'a4': '112 - 192x^2 + 16x^4',
            'a3': '-256x + 96x^3',
            'a2': '-64 + 112x^2',
            'a1': '16x',
        },
    ],
    'J4.b0': [
        {
            'a4': '(1 - x^2)^2',
            'a3': '-8x(1 - x^2)',
            'a2': '14x^2 - 6',
            'a1': '4x',
        },
        {
            'a4': '(1 - x^2)^2',
            'a3': '-6x(1 - x^2)',
            'a2': '7x^2 - 4',
            'a1': 'x',
        },
        {
            'a4': '(1 - x^2)^2',
            'a3': '-10x(1 - x^2)',
            'a2': '23x^2 - 8',
            'a1': '9x',
        },
    ],
    'J6.I.a': [
        {
            'a6': '(1 - x^2)^3',
            'a5': '-18x(1 - x^2)^2',
            'a4': '2(1 - x^2)(49x^2 - 13)',
            'a3': '-8x(-17 + 23x^2)',
            'a2': '36 - 100x^2',
            'a1': '-8x',
        },
    ],
    'J8.I.a': [
        {
            'a8': '(1 - x^2)^4',
            'a7': '-32x(1 - x^2)^3',
            'a6': '4(x^2 - 1)^2(89x^2 - 17)',
            'a5': '24x(x^2 - 1)(71x^2 - 39)',
            'a4': '4(883x^4 - 926x^2 + 139)',
            'a3': '64x(44x^2 - 29)',
            'a2': '8(79x^2 - 27)',
            'a1': '16x',
        },
    ],
    'L4': [
        {
            'a4': 'x^2',
            'a3': '-2(-2 + x)x',
            'a2': 'x^2 - 5x + 2',
            'a1': '-1 + x',
        },
    ],
    'L6': [
        {
            'a6': 'x^3',
            'a5': '-3(-3 + x)x^2',
            'a4': '3x(x^2 - 7x + 6)',
            'a3': '-x^3 + 15x^2 - 30x + 6',
            'a2': '-3x^2 + 13x - 6',
            'a1': '1 - x',
        },
    ],
    'L8': [
        {
            'a8': 'x^4',
            'a7': '-4(-4 + x)x^3',
            'a6': '6x^2(x^2 - 9x + 12)',
            'a5': '-2x(2x^3 - 33x^2 + 99x - 48)',
            'a4': 'x^4 - 34x^3 + 187x^2 - 204x + 24',
            'a3': '6x^3 - 68x^2 + 136x - 36',
            'a2': '7x^2 - 29x + 14',
            'a1': 'x - 1',
        },
    ],
}
