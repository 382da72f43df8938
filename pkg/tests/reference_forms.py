"""Published Hilbert quasi-polynomials, transcribed term by term.

Each entry maps a degree tuple to a function of ``n`` evaluated with mpmath.
"""

from mpmath import cos, mpf, pi, sin, sqrt


def _s5():
    return sqrt(5)


def i2(n):
    return cos(pi * n) / 2 + mpf(1) / 2


def i3(n):
    return cos(pi * n) / 4 + cos(pi * n / 2) / 2 + mpf(1) / 4


def i4(n):
    return (n / mpf(6) + cos(pi * n) / 4 + cos(2 * pi * n / 3) / 3
            - sqrt(3) / 9 * sin(2 * pi * n / 3) + mpf(5) / 12)


def i5(n, restore_n=True):
    # the published form drops the factor n on the first cos(pi n/2) term
    k = n if restore_n else 1
    return ((cos(pi * n) / 384 + mpf(1) / 384) * n ** 2 + (cos(pi * n) / 64 + mpf(1) / 64) * n
            + mpf(3) / 32 * k * cos(pi * n / 2) + mpf(107) / 576 * cos(pi * n)
            + cos(pi * n / 3) / 9 + cos(2 * pi * n / 3) / 9 + sin(pi * n / 4) / 16 + cos(pi * n / 4) / 16
            - sin(3 * pi * n / 4) / 16 + cos(3 * pi * n / 4) / 16 + mpf(9) / 32 * cos(pi * n / 2)
            + mpf(107) / 576)


def i6(n):
    s5 = _s5()
    a, b = sqrt(10 + 2 * s5), sqrt(10 - 2 * s5)
    return (n ** 3 / mpf(1440) + (cos(pi * n) / 64 + mpf(7) / 960) * n ** 2
            + (mpf(7) / 64 * cos(pi * n) + mpf(37) / 320) * n
            + s5 * a / 100 * sin(2 * pi * n / 5) - a / 100 * sin(2 * pi * n / 5)
            - s5 / 50 * cos(4 * pi * n / 5) + cos(4 * pi * n / 5) / 10
            - s5 * b / 100 * sin(4 * pi * n / 5) - b / 100 * sin(4 * pi * n / 5)
            + cos(2 * pi * n / 3) / 9 + sqrt(3) / 27 * sin(2 * pi * n / 3)
            - sin(pi * n / 2) / 16 + cos(pi * n / 2) / 16 + mpf(9) / 32 * cos(pi * n)
            + cos(2 * pi * n / 5) / 10 + s5 / 50 * cos(2 * pi * n / 5) + mpf(497) / 1440)


def i13(n):
    return ((cos(pi * n) / 64 + mpf(1) / 64) * n ** 2
            + (mpf(3) / 16 * cos(pi * n / 2) + mpf(3) / 32 * cos(pi * n) + mpf(3) / 32) * n
            + mpf(7) / 32 * cos(pi * n) + mpf(9) / 16 * cos(pi * n / 2) + mpf(7) / 32)


def i14(n):
    s5 = _s5()
    a, b = sqrt(10 + 2 * s5), sqrt(10 - 2 * s5)
    return (n ** 3 / mpf(540) + mpf(7) / 360 * n ** 2
            + (cos(2 * pi * n / 3) / 27 - sqrt(3) / 27 * sin(2 * pi * n / 3) + mpf(79) / 540) * n
            + s5 * a / 100 * sin(2 * pi * n / 5) - s5 / 50 * cos(4 * pi * n / 5)
            + cos(4 * pi * n / 5) / 10 - b / 100 * sin(4 * pi * n / 5)
            - s5 * b / 100 * sin(4 * pi * n / 5) + mpf(7) / 27 * cos(2 * pi * n / 3)
            - mpf(7) / 81 * sqrt(3) * sin(2 * pi * n / 3) + mpf(3) / 16 * cos(pi * n)
            + cos(2 * pi * n / 5) / 10 + s5 / 50 * cos(2 * pi * n / 5)
            - a / 100 * sin(2 * pi * n / 5) + mpf(763) / 2160)


def i23(n):
    s5 = _s5()
    a, b = sqrt(10 + 2 * s5), sqrt(10 - 2 * s5)
    return (n ** 3 / mpf(360) + mpf(7) / 240 * n ** 2 + n / mpf(6)
            + cos(2 * pi * n / 5) / 10 - s5 / 50 * cos(2 * pi * n / 5)
            + sqrt(50 + 10 * s5) / 50 * sin(2 * pi * n / 5)
            + cos(4 * pi * n / 5) / 10 + s5 / 50 * cos(4 * pi * n / 5) + cos(pi * n / 2) / 8
            - b / 25 * sin(4 * pi * n / 5) + cos(2 * pi * n / 3) / 9
            + sqrt(3) / 27 * sin(2 * pi * n / 3) - sin(pi * n / 2) / 8
            + mpf(7) / 32 * cos(pi * n) - a / 25 * sin(2 * pi * n / 5)
            - s5 * b / 50 * sin(4 * pi * n / 5) + mpf(497) / 1440)


def i123(n):
    s5 = _s5()
    a, b = sqrt(10 + 2 * s5), sqrt(10 - 2 * s5)
    return (mpf(17) / 172800 * n ** 5 + mpf(17) / 7680 * n ** 4 + mpf(1033) / 51840 * n ** 3
            + (cos(pi * n) / 512 + mpf(689) / 7680) * n ** 2
            + (mpf(4) / 81 * cos(2 * pi * n / 3) - mpf(3) / 64 * sin(pi * n / 2)
               + mpf(3) / 64 * cos(pi * n / 2) + mpf(9) / 512 * cos(pi * n) + mpf(46667) / 207360) * n
            - s5 / 50 * cos(2 * pi * n / 5) + mpf(3) / 50 * cos(2 * pi * n / 5)
            - a / 100 * sin(2 * pi * n / 5) + s5 * a / 500 * sin(2 * pi * n / 5)
            + mpf(3) / 50 * cos(4 * pi * n / 5) + s5 / 50 * cos(4 * pi * n / 5)
            - s5 * b / 500 * sin(4 * pi * n / 5) - b / 100 * sin(4 * pi * n / 5)
            + mpf(2) / 9 * cos(2 * pi * n / 3) + mpf(4) / 243 * sqrt(3) * sin(2 * pi * n / 3)
            - mpf(3) / 16 * sin(pi * n / 2) + mpf(15) / 64 * cos(pi * n / 2)
            + mpf(141) / 1024 * cos(pi * n) + mpf(65827) / 230400)


DISPLAYS = {
    (2,): i2,
    (3,): i3,
    (4,): i4,
    (5,): i5,
    (6,): i6,
    (1, 1): i2,
    (1, 2): i4,
    (1, 3): i13,
    (1, 4): i14,
    (2, 3): i23,
    (1, 2, 3): i123,
}
