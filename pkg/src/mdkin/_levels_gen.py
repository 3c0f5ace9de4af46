"""Closed-form constraint Jacobians and forward-map derivative packs.

Generated by tools/gen_levels.py; do not edit by hand.

Every level has a 3-component constraint F(input, output) = 0 with
A = dF/d(input) and B = dF/d(output), so the level Jacobian mapping
input rates to output rates is J = -B^-1 A.  The *_d1 / *_d2 variants
are total time derivatives of the matrices, taking the state rates as
extra arguments.  Forward maps expose value, Jacobian and the bias terms
bias2 (second time derivative with zero state acceleration) and bias3
(third time derivative with zero state jerk).

All functions accept float or MultiDual scalars.
"""
# flake8: noqa: E501

from .multidual import sin, cos, sqrt, atan2, asin


def rho_q_A(s, g):
    rho1, rho2, rho3, q1, q2, q3 = s
    l, l0, l1, l2, l3, l4 = g
    x0 = -(q1 - q2)**2/4
    x1 = sqrt(l1**2 + x0)
    x2 = sin(rho3)
    x3 = cos(rho3)
    return ((1, 0, 0),
            (0, 2*(-l4 + rho2), 0),
            (0, 0, 2*x1*(x2*(l2*cos(q3) - x1*x3) + x3*(-l2*sin(q3) + x1*x2 + sqrt(l3**2 + x0)))))

def rho_q_A_d1(s, sd, g):
    rho1, rho2, rho3, q1, q2, q3 = s
    rho1_d1, rho2_d1, rho3_d1, q1_d1, q2_d1, q3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(q3)
    x1 = sin(rho3)
    x2 = cos(q3)
    x3 = cos(rho3)
    x4 = l1**2
    x5 = q1 - q2
    x6 = x5**2
    x7 = -x6/4
    x8 = sqrt(x4 + x7)
    x9 = 4*x4 - x6
    x10 = x3*x8
    x11 = l2*x2 - x10
    x12 = sqrt(l3**2 + x7)
    x13 = x1*x8
    x14 = -l2*x0 + x12 + x13
    x15 = 1/x8
    x16 = x1*x15
    x17 = -x1*x3 + x10*(x16 + 1/x12) + x11*x16 + x14*x15*x3
    x18 = x5/2
    return ((0, 0, 0),
            (0, 2*rho2_d1, 0),
            (0, 0, -2*l2*q3_d1*x8*(x0*x1 + x2*x3) - q1_d1*x17*x18 + q2_d1*x17*x18 + rho3_d1*(x1**2*x9 + 4*x10*x11 - 4*x13*x14 + x3**2*x9)/2))

def rho_q_A_d2(s, sd, sdd, g):
    rho1, rho2, rho3, q1, q2, q3 = s
    rho1_d1, rho2_d1, rho3_d1, q1_d1, q2_d1, q3_d1 = sd
    rho1_d2, rho2_d2, rho3_d2, q1_d2, q2_d2, q3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = l1**2
    x1 = q1 - q2
    x2 = x1**2
    x3 = -x2/4
    x4 = x0 + x3
    x5 = sqrt(x4)
    x6 = sin(q3)
    x7 = sin(rho3)
    x8 = cos(q3)
    x9 = cos(rho3)
    x10 = x6*x7 + x8*x9
    x11 = l2*x10
    x12 = x6*x9 - x7*x8
    x13 = 4*q3_d1
    x14 = x12*x13*x5
    x15 = -x1
    x16 = -x15**2/4
    x17 = x0 + x16
    x18 = sqrt(x17)
    x19 = 4*rho3_d1
    x20 = 1/x18
    x21 = x10*x20
    x22 = x7**2
    x23 = 4*x0 - x2
    x24 = x9**2
    x25 = x5*x9
    x26 = l2*x8 - x25
    x27 = l3**2
    x28 = x27 + x3
    x29 = sqrt(x28)
    x30 = x5*x7
    x31 = -l2*x6 + x29 + x30
    x32 = 1/x5
    x33 = x32*x7
    x34 = 1/x29
    x35 = x33 + x34
    x36 = x31*x9
    x37 = x32*x36
    x38 = x25*x35 + x26*x33 + x37 - x7*x9
    x39 = x1/2
    x40 = x26*x7
    x41 = x32*x9
    x42 = 2*x22 + x24 + x26*x41 - x30*x35 - x31*x33
    x43 = x1*x42
    x44 = x1*x11*x13*x32
    x45 = 4*x33
    x46 = x2/x4**(3/2)
    x47 = 4*x7*x9
    x48 = -2*x2*x35*x41 + x2*x47/x23 + x26*x45 + x36*x46 + 4*x37 + x40*x46 - x47
    x49 = x25*(x2/x28**(3/2) + 4*x34 + x45 + x46*x7) + x48
    x50 = x16 + x27
    x51 = x1*x15
    x52 = x25*(4*x20*x7 + 4/sqrt(x50) - x51/x50**(3/2) - x51*x7/x17**(3/2)) + x48
    return ((0, 0, 0),
            (0, 2*rho2_d2, 0),
            (0, 0, -l2*q3_d1*(q1_d1*x15*x21 + q2_d1*x1*x21 + x12*x18*x19 - x14)/2 + q1_d1*(-q1_d1*x52 + q2_d1*x49 - x19*x43 + x44)/8 - q1_d2*x38*x39 + q2_d1*(q1_d1*x49 - q2_d1*x52 + x1*x19*x42 - x44)/8 + q2_d2*x38*x39 - 2*q3_d2*x11*x5 + rho3_d1*(-l2*x14 - q1_d1*x43 + q2_d1*x1*x42 - x19*x5*(x36 + x40))/2 + rho3_d2*(x22*x23 + x23*x24 + 4*x25*x26 - 4*x30*x31)/2))

def rho_q_B(s, g):
    rho1, rho2, rho3, q1, q2, q3 = s
    l, l0, l1, l2, l3, l4 = g
    x0 = q1 - q2
    x1 = cos(rho3)
    x2 = -x0**2/4
    x3 = sqrt(l1**2 + x2)
    x4 = 1/x3
    x5 = cos(q3)
    x6 = l2*x5 - x1*x3
    x7 = sqrt(l3**2 + x2)
    x8 = sin(rho3)
    x9 = sin(q3)
    x10 = -l2*x9 + x3*x8 + x7
    x11 = -x1*x4*x6 + x10*(x4*x8 + 1/x7)
    x12 = x0/2
    return ((-1/2, -1/2, 0),
            (x0/2, -x0/2, 0),
            (-x11*x12, x11*x12, -2*l2*(x10*x5 + x6*x9)))

def rho_q_B_d1(s, sd, g):
    rho1, rho2, rho3, q1, q2, q3 = s
    rho1_d1, rho2_d1, rho3_d1, q1_d1, q2_d1, q3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = q1_d1 - q2_d1
    x1 = sin(q3)
    x2 = cos(rho3)
    x3 = l1**2
    x4 = q1 - q2
    x5 = x4**2
    x6 = -x5/4
    x7 = x3 + x6
    x8 = sqrt(x7)
    x9 = 1/x8
    x10 = cos(q3)
    x11 = l3**2
    x12 = x11 + x6
    x13 = sqrt(x12)
    x14 = 1/x13
    x15 = sin(rho3)
    x16 = x15*x9
    x17 = x14 + x16
    x18 = -x1*x2*x9 + x10*x17
    x19 = 4*l2*q3_d1*x4
    x20 = x2*x8
    x21 = l2*x10 - x20
    x22 = -l2*x1 + x13 + x15*x8
    x23 = x2*x9
    x24 = -x15*x2 + x16*x21 + x17*x20 + x22*x23
    x25 = x5/x7**(3/2)
    x26 = x17**2*x5 + 4*x2**2*x5/(4*x3 - x5) + x2*x21*x25 + 4*x21*x23 - x22*(4*x14 + x15*x25 + 4*x16 + x5/x12**(3/2))
    x27 = q2_d1*x26
    x28 = q1_d1*x26
    x29 = -x4
    x30 = -x29**2/4
    x31 = sqrt(x3 + x30)
    x32 = 1/x31
    x33 = -x1*x2*x32/2 + x10*(x15*x32 + 1/sqrt(x11 + x30))/2
    return ((0, 0, 0),
            (x0/2, -x0/2, 0),
            (-rho3_d1*x24*x4/2 + x18*x19/8 - x27/8 + x28/8, rho3_d1*x24*x4/2 - x18*x19/8 + x27/8 - x28/8, l2*(-q1_d1*x29*x33 - q2_d1*x33*x4 + 2*q3_d1*(l2*x1**2 + l2*x10**2 + x1*x22 - x10*x21) - 2*rho3_d1*x31*(x1*x15 + x10*x2))))

def rho_q_B_d2(s, sd, sdd, g):
    rho1, rho2, rho3, q1, q2, q3 = s
    rho1_d1, rho2_d1, rho3_d1, q1_d1, q2_d1, q3_d1 = sd
    rho1_d2, rho2_d2, rho3_d2, q1_d2, q2_d2, q3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = q1_d2 - q2_d2
    x1 = sin(q3)
    x2 = cos(rho3)
    x3 = l1**2
    x4 = q1 - q2
    x5 = x4**2
    x6 = -x5/4
    x7 = x3 + x6
    x8 = sqrt(x7)
    x9 = 1/x8
    x10 = cos(q3)
    x11 = l3**2
    x12 = x11 + x6
    x13 = sqrt(x12)
    x14 = 1/x13
    x15 = sin(rho3)
    x16 = x15*x9
    x17 = x14 + x16
    x18 = -x1*x2*x9 + x10*x17
    x19 = -x18
    x20 = 16*x4
    x21 = l2*q3_d2*x20
    x22 = x2*x8
    x23 = l2*x10 - x22
    x24 = x15*x8
    x25 = -l2*x1 + x13 + x24
    x26 = x2*x9
    x27 = x25*x26
    x28 = -x15*x2 + x16*x23 + x17*x22 + x27
    x29 = rho3_d2*x20
    x30 = 4*x3 - x5
    x31 = 1/x30
    x32 = x2**2
    x33 = x31*x32
    x34 = x23*x26
    x35 = x7**(-3/2)
    x36 = x2*x35
    x37 = x36*x5
    x38 = 4*x16
    x39 = x12**(-3/2)
    x40 = x15*x5
    x41 = x35*x40
    x42 = 4*x14 + x38 + x39*x5 + x41
    x43 = 4*x17**2*x5 + 4*x23*x37 - 4*x25*x42 + 16*x33*x5 + 16*x34
    x44 = q1_d2*x43
    x45 = q2_d2*x43
    x46 = 4*rho3_d1
    x47 = -x4
    x48 = -x47**2/4
    x49 = x3 + x48
    x50 = sqrt(x49)
    x51 = 1/x50
    x52 = x10*x2
    x53 = x1*x15 + x52
    x54 = x51*x53
    x55 = x47*x54
    x56 = 4*q3_d1
    x57 = x4*(x1*x17 + x52*x9)
    x58 = x56*x57
    x59 = x1*x2
    x60 = x35*x5*x59 + 4*x59*x9
    x61 = -x10*x42 + x60
    x62 = x4*x47
    x63 = x62/x49**(3/2)
    x64 = x11 + x48
    x65 = 4*x15
    x66 = -x15*x63 + x51*x65 - x62/x64**(3/2) + 4/sqrt(x64)
    x67 = q1_d1*(-x10*x66 + 4*x51*x59 - x59*x63) - q2_d1*x61 + x46*x55 + x58
    x68 = l2*x56
    x69 = 4*x15*x2
    x70 = -2*x17*x26*x5 + x23*x38 + x23*x41 + x31*x5*x69 - x69
    x71 = x22*x42 + x70
    x72 = x27*(x5/x7 + 4) + x71
    x73 = x22*x66 + x70
    x74 = x2*x25*x51*(4 - x62/x49) + x73
    x75 = x4*x46
    x76 = x53*x9
    x77 = x4*x68*x76 - x75*(2*x15**2 - x16*x25 - x17*x24 + x32 + x34)
    x78 = x17*x42
    x79 = x7**(-5/2)
    x80 = x25*(x35*x65 + 4*x39 + x40*x79 + x5/x12**(5/2))
    x81 = x23*x36
    x82 = x32*x5/x30**2
    x83 = x2*x23*x5*x79
    x84 = 16*x33 - x80 + 4*x81 + 16*x82 + x83
    x85 = x78 + x84
    x86 = 3*x4
    x87 = x25*x37 + 4*x27
    x88 = x17*x66
    x89 = x4*(48*x33 + 2*x78 - 3*x80 + 12*x81 + 48*x82 + 3*x83 + x88)
    x90 = -q1_d1*x89 + q2_d1*x85*x86 + x46*(x71 + x87) + x61*x68
    x91 = -x10*x66 + x60
    x92 = -3*q1_d1*x4*x85 + x46*(x73 + x87) + x68*x91
    x93 = q1_d1*x61 - q2_d1*x91 + x58 - x75*x76
    x94 = x4/2
    x95 = -x10*x15 + x59
    x96 = x8*x95
    return ((0, 0, 0),
            (x0/2, -x0/2, 0),
            (q1_d1*(-q2_d1*x89 - x92)/32 + q2_d1*x90/32 - x19*x21/32 - x28*x29/32 + x44/32 - x45/32 + x46*(-q1_d1*x74 + q2_d1*x72 + x77)/32 - x67*x68/32, q1_d1*x90/32 + q2_d1*(-q2_d1*x86*(x84 + x88) - x92)/32 - x18*x21/32 + x28*x29/32 - x44/32 + x45/32 + x46*(q1_d1*x72 - q2_d1*x74 - x77)/32 + x68*x93/32, l2*(-q1_d1*x67/8 - q1_d2*x19*x94 + q2_d1*x93/8 - q2_d2*x18*x94 + q3_d1*(-q1_d1*x57 + q2_d1*x57 + x46*x96 + x56*(x1*x23 + x10*x25))/2 + 2*q3_d2*(l2*x1**2 + l2*x10**2 + x1*x25 - x10*x23) - rho3_d1*(q1_d1*x55 + q2_d1*x4*x54 + x46*x50*x95 - x56*x96)/2 - 2*rho3_d2*x53*x8)))

def p_rho_A(s, g):
    xp, yp, zp, rho1, rho2, rho3 = s
    l, l0, l1, l2, l3, l4 = g
    return ((1, 0, 0),
            (0, 1, 0),
            (0, 0, 1))

def p_rho_A_d1(s, sd, g):
    xp, yp, zp, rho1, rho2, rho3 = s
    xp_d1, yp_d1, zp_d1, rho1_d1, rho2_d1, rho3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    return ((0, 0, 0),
            (0, 0, 0),
            (0, 0, 0))

def p_rho_A_d2(s, sd, sdd, g):
    xp, yp, zp, rho1, rho2, rho3 = s
    xp_d1, yp_d1, zp_d1, rho1_d1, rho2_d1, rho3_d1 = sd
    xp_d2, yp_d2, zp_d2, rho1_d2, rho2_d2, rho3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    return ((0, 0, 0),
            (0, 0, 0),
            (0, 0, 0))

def p_rho_B(s, g):
    xp, yp, zp, rho1, rho2, rho3 = s
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(rho3)
    x1 = cos(rho3)
    return ((0, -x0, -rho2*x1),
            (-1, 0, 0),
            (0, -x1, rho2*x0))

def p_rho_B_d1(s, sd, g):
    xp, yp, zp, rho1, rho2, rho3 = s
    xp_d1, yp_d1, zp_d1, rho1_d1, rho2_d1, rho3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(rho3)
    x1 = rho3_d1*x0
    x2 = sin(rho3)
    x3 = rho3_d1*x2
    return ((0, -x1, rho2*x3 - rho2_d1*x0),
            (0, 0, 0),
            (0, x3, rho2*x1 + rho2_d1*x2))

def p_rho_B_d2(s, sd, sdd, g):
    xp, yp, zp, rho1, rho2, rho3 = s
    xp_d1, yp_d1, zp_d1, rho1_d1, rho2_d1, rho3_d1 = sd
    xp_d2, yp_d2, zp_d2, rho1_d2, rho2_d2, rho3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(rho3)
    x1 = rho3_d2*x0
    x2 = sin(rho3)
    x3 = rho3_d1**2
    x4 = rho3_d2*x2
    x5 = rho2_d1*x2
    x6 = rho2*rho3_d1
    x7 = rho2_d1*x0
    return ((0, -x1 + x2*x3, rho2*x4 - rho2_d2*x0 + rho3_d1*x5 + rho3_d1*(x0*x6 + x5)),
            (0, 0, 0),
            (0, x0*x3 + x4, rho2*x1 + rho2_d2*x2 + rho3_d1*x7 - rho3_d1*(x2*x6 - x7)))

def rcm_p_A(s, g):
    psi, th, lins, xp, yp, zp = s
    l, l0, l1, l2, l3, l4 = g
    x0 = l - lins
    x1 = sin(psi)
    x2 = cos(th)
    x3 = x1*x2
    x4 = cos(psi)
    x5 = sin(th)
    x6 = x0*x5
    x7 = x2*x4
    return ((-x0*x3, -x4*x6, -x7),
            (x0*x7, -x1*x6, -x3),
            (0, -x0*x2, x5))

def rcm_p_A_d1(s, sd, g):
    psi, th, lins, xp, yp, zp = s
    psi_d1, th_d1, lins_d1, xp_d1, yp_d1, zp_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(psi)
    x1 = cos(th)
    x2 = lins_d1*x1
    x3 = l - lins
    x4 = sin(th)
    x5 = x0*x4
    x6 = cos(psi)
    x7 = psi_d1*x1
    x8 = x6*x7
    x9 = x4*x6
    x10 = psi_d1*x3
    x11 = th_d1*x1
    x12 = x11*x3
    x13 = x0*x7
    x14 = th_d1*x9
    return ((th_d1*x3*x5 + x0*x2 - x3*x8, lins_d1*x9 + x10*x5 - x12*x6, x13 + x14),
            (-x13*x3 - x14*x3 - x2*x6, lins_d1*x0*x4 - x0*x12 - x10*x9, th_d1*x0*x4 - x8),
            (0, th_d1*x3*x4 + x2, x11))

def rcm_p_A_d2(s, sd, sdd, g):
    psi, th, lins, xp, yp, zp = s
    psi_d1, th_d1, lins_d1, xp_d1, yp_d1, zp_d1 = sd
    psi_d2, th_d2, lins_d2, xp_d2, yp_d2, zp_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(psi)
    x1 = cos(th)
    x2 = lins_d2*x1
    x3 = l - lins
    x4 = sin(th)
    x5 = x0*x4
    x6 = th_d2*x5
    x7 = cos(psi)
    x8 = x1*x7
    x9 = psi_d2*x8
    x10 = psi_d1*x8
    x11 = th_d1*x5
    x12 = x10 - x11
    x13 = lins_d1*x8
    x14 = x0*x1
    x15 = psi_d1*x14
    x16 = x4*x7
    x17 = th_d1*x16
    x18 = psi_d1*x16
    x19 = th_d1*x14
    x20 = th_d2*x1*x3
    x21 = psi_d1*x5
    x22 = th_d1*x8
    x23 = x21 - x22
    x24 = lins_d1*x4
    x25 = -x3
    x26 = psi_d2*x14
    x27 = th_d2*x16
    x28 = x15 + x17
    x29 = lins_d1*x14 - x10*x3 + x11*x3
    x30 = x21*x3 - x22*x3 + x24*x7
    x31 = x18 + x19
    return ((lins_d1*x12 + psi_d1*(x13 + x15*x3 + x17*x3) - th_d1*(lins_d1*x0*x4 - x18*x3 - x19*x3) + x0*x2 + x3*x6 - x3*x9, -lins_d1*x23 + lins_d2*x4*x7 - psi_d1*(x0*x24 + x18*x25 + x19*x25) + psi_d2*x0*x3*x4 - th_d1*(-x13 + x15*x25 + x17*x25) - x20*x7, psi_d1*x12 - th_d1*x23 + x26 + x27),
            (lins_d1*x28 + psi_d1*x29 + th_d1*x30 - x2*x7 - x26*x3 - x27*x3, lins_d1*x31 + lins_d2*x5 + psi_d1*x30 - psi_d2*x16*x3 + th_d1*x29 - x0*x20, psi_d1*x28 + th_d1*x31 + x6 - x9),
            (0, lins_d2*x1 - th_d1*x24 - th_d1*(th_d1*x1*x25 + x24) + th_d2*x3*x4, -th_d1**2*x4 + th_d2*x1))

def rcm_p_B(s, g):
    psi, th, lins, xp, yp, zp = s
    l, l0, l1, l2, l3, l4 = g
    return ((1, 0, 0),
            (0, 1, 0),
            (0, 0, 1))

def rcm_p_B_d1(s, sd, g):
    psi, th, lins, xp, yp, zp = s
    psi_d1, th_d1, lins_d1, xp_d1, yp_d1, zp_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    return ((0, 0, 0),
            (0, 0, 0),
            (0, 0, 0))

def rcm_p_B_d2(s, sd, sdd, g):
    psi, th, lins, xp, yp, zp = s
    psi_d1, th_d1, lins_d1, xp_d1, yp_d1, zp_d1 = sd
    psi_d2, th_d2, lins_d2, xp_d2, yp_d2, zp_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    return ((0, 0, 0),
            (0, 0, 0),
            (0, 0, 0))

def rcm_e_A(s, g):
    xe, ye, ze, psi, th, lins = s
    l, l0, l1, l2, l3, l4 = g
    return ((1, 0, 0),
            (0, 1, 0),
            (0, 0, 1))

def rcm_e_A_d1(s, sd, g):
    xe, ye, ze, psi, th, lins = s
    xe_d1, ye_d1, ze_d1, psi_d1, th_d1, lins_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    return ((0, 0, 0),
            (0, 0, 0),
            (0, 0, 0))

def rcm_e_A_d2(s, sd, sdd, g):
    xe, ye, ze, psi, th, lins = s
    xe_d1, ye_d1, ze_d1, psi_d1, th_d1, lins_d1 = sd
    xe_d2, ye_d2, ze_d2, psi_d2, th_d2, lins_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    return ((0, 0, 0),
            (0, 0, 0),
            (0, 0, 0))

def rcm_e_B(s, g):
    xe, ye, ze, psi, th, lins = s
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(psi)
    x1 = cos(th)
    x2 = x0*x1
    x3 = cos(psi)
    x4 = sin(th)
    x5 = lins*x4
    x6 = x1*x3
    return ((lins*x2, x3*x5, -x6),
            (-lins*x6, x0*x5, -x2),
            (0, lins*x1, x4))

def rcm_e_B_d1(s, sd, g):
    xe, ye, ze, psi, th, lins = s
    xe_d1, ye_d1, ze_d1, psi_d1, th_d1, lins_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(psi)
    x1 = cos(th)
    x2 = lins_d1*x1
    x3 = cos(psi)
    x4 = psi_d1*x1
    x5 = x3*x4
    x6 = sin(th)
    x7 = x0*x6
    x8 = x3*x6
    x9 = th_d1*x1
    x10 = lins*x9
    x11 = lins*psi_d1
    x12 = x0*x4
    x13 = th_d1*x8
    return ((-lins*th_d1*x7 + lins*x5 + x0*x2, lins_d1*x8 + x10*x3 - x11*x7, x12 + x13),
            (lins*x12 + lins*x13 - x2*x3, lins_d1*x7 + x0*x10 + x11*x8, th_d1*x0*x6 - x5),
            (0, -lins*th_d1*x6 + lins_d1*x1, x9))

def rcm_e_B_d2(s, sd, sdd, g):
    xe, ye, ze, psi, th, lins = s
    xe_d1, ye_d1, ze_d1, psi_d1, th_d1, lins_d1 = sd
    xe_d2, ye_d2, ze_d2, psi_d2, th_d2, lins_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(psi)
    x1 = cos(th)
    x2 = lins_d2*x1
    x3 = cos(psi)
    x4 = x1*x3
    x5 = psi_d2*x4
    x6 = sin(th)
    x7 = x0*x6
    x8 = th_d2*x7
    x9 = psi_d1*x4
    x10 = th_d1*x7
    x11 = -x10 + x9
    x12 = lins_d1*x6
    x13 = x3*x6
    x14 = psi_d1*x13
    x15 = x0*x1
    x16 = th_d1*x15
    x17 = lins*x14 + lins*x16 + x0*x12
    x18 = psi_d1*x15
    x19 = th_d1*x13
    x20 = lins*x18 + lins*x19 - lins_d1*x4
    x21 = lins*psi_d2
    x22 = psi_d1*x7
    x23 = th_d1*x4
    x24 = x22 - x23
    x25 = psi_d2*x15
    x26 = th_d2*x13
    x27 = x18 + x19
    x28 = -lins*x10 + lins*x9 + lins_d1*x15
    x29 = -lins*x22 + lins*x23 + x12*x3
    x30 = x14 + x16
    return ((lins*x5 - lins*x8 + lins_d1*x11 - psi_d1*x20 - th_d1*x17 + x0*x2, lins*th_d2*x1*x3 - lins_d1*x24 + lins_d2*x3*x6 - psi_d1*x17 - th_d1*x20 - x21*x7, psi_d1*x11 - th_d1*x24 + x25 + x26),
            (lins*x25 + lins*x26 + lins_d1*x27 + psi_d1*x28 + th_d1*x29 - x2*x3, lins*th_d2*x0*x1 + lins_d1*x30 + lins_d2*x7 + psi_d1*x29 + th_d1*x28 + x13*x21, psi_d1*x27 + th_d1*x30 - x5 + x8),
            (0, -lins*th_d2*x6 + lins_d2*x1 - th_d1*x12 - th_d1*(lins*th_d1*x1 + x12), -th_d1**2*x6 + th_d2*x1))

def dq_A(s, g):
    u1, u2, lins, rho1, rho2, u3 = s
    l, l0, l1, l2, l3, l4 = g
    x0 = l - lins
    x1 = u1**2
    x2 = 1/(x1 + 1)
    x3 = x2*(x1 - 1)
    x4 = u2**2
    x5 = 1/(x4 + 1)
    x6 = x5*(x4 - 1)
    x7 = 2*x2
    x8 = x6*x7
    x9 = u1*x8
    x10 = x6 - 1
    x11 = 2*x5
    x12 = u2*x11
    return ((x0*x9*(x3 - 1), x0*x10*x12*x3, x3*x6),
            (x0*x8*(-x1*x7 + 1), -4*u1*u2*x0*x10*x2*x5, -x9),
            (0, x0*x11*(-x11*x4 + 1), -x12))

def dq_A_d1(s, sd, g):
    u1, u2, lins, rho1, rho2, u3 = s
    u1_d1, u2_d1, lins_d1, rho1_d1, rho2_d1, u3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = u1**2
    x1 = x0 - 1
    x2 = x0 + 1
    x3 = 1/x2
    x4 = x1*x3
    x5 = u2**2
    x6 = x5 - 1
    x7 = lins_d1*x6
    x8 = x0*x3
    x9 = 4*x8
    x10 = 1 - x4
    x11 = l - lins
    x12 = u1_d1*x11
    x13 = x12*x6
    x14 = u2_d1*x11
    x15 = 2*x14
    x16 = x5 + 1
    x17 = 1/x16
    x18 = x17*x6
    x19 = -x18
    x20 = u2*(x10 + x18*x4 + x19)
    x21 = 2*x17
    x22 = x21*x3
    x23 = x18 - 1
    x24 = lins_d1*u2
    x25 = x17*x5
    x26 = 4*x25
    x27 = x19 + 1
    x28 = x14*(-x26 + x27 + 4*x5*x6/x16**2)
    x29 = 2*u1
    x30 = -x1
    x31 = -x6
    x32 = u1_d1*x31
    x33 = u2*u2_d1*(x17*x31 + 1)
    x34 = 2*x8
    x35 = x34 - 1
    x36 = u2*(x18*x34 + x27 - x34)
    x37 = 2*x25 - 1
    return ((-x22*(u1*x15*x20 + u1*x7*(x4 - 1) + x13*(4*x0*x1/x2**2 + x10 - x9)), -x22*(x1*x23*x24 + x1*x28 + x12*x20*x29), -x22*(u1*x32*(x3*x30 + 1) + x30*x33)),
            (x22*(x13*x29*x3*(x9 - 3) + x15*x36 + x35*x7), 4*x17*x3*(u1*x23*x24 + u1*x28 + x12*x36), -x22*(x29*x33 + x32*x35)),
            (0, x21*(lins_d1*x37 + u2*x14*x21*(x26 - 3)), u2_d1*x21*x37))

def dq_A_d2(s, sd, sdd, g):
    u1, u2, lins, rho1, rho2, u3 = s
    u1_d1, u2_d1, lins_d1, rho1_d1, rho2_d1, u3_d1 = sd
    u1_d2, u2_d2, lins_d2, rho1_d2, rho2_d2, u3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = lins_d2*u1
    x1 = u2**2
    x2 = x1 - 1
    x3 = u1**2
    x4 = x3 - 1
    x5 = x3 + 1
    x6 = 1/x5
    x7 = x4*x6
    x8 = x2*(x7 - 1)
    x9 = x3*x6
    x10 = 4*x9
    x11 = x5**(-2)
    x12 = x11*x3
    x13 = 4*x12
    x14 = 1 - x7
    x15 = x2*(-x10 + x13*x4 + x14)
    x16 = l - lins
    x17 = u1_d2*x16
    x18 = u2_d2*x16
    x19 = x1 + 1
    x20 = 1/x19
    x21 = x2*x20
    x22 = -x21
    x23 = u1*(x14 + x21*x7 + x22)
    x24 = 2*x23
    x25 = u2*x24
    x26 = 2*u2_d1
    x27 = u2*x26
    x28 = u1_d1*x15 + x23*x27
    x29 = -x4
    x30 = x29*x6
    x31 = -x30
    x32 = 2*x9
    x33 = x32 - 1
    x34 = u1*x6
    x35 = u1_d1*x34
    x36 = -x2
    x37 = -x16
    x38 = x36*x37
    x39 = x20*x36
    x40 = x10*x39
    x41 = x13*x29
    x42 = -x39
    x43 = -x30*x39 + x31 + x42 - 1
    x44 = x37*(x10 + x39*x41 + x40 + x41 + x43)
    x45 = lins_d1*u2
    x46 = u1*u2_d1
    x47 = x1*x20
    x48 = 4*x47
    x49 = x19**(-2)
    x50 = 4*x1*x49
    x51 = x36*x50
    x52 = x37*(x30*x48 + x30*x51 + x43 + x48 + x51)
    x53 = u1_d1*u2
    x54 = -2*x23*x45 + 2*x44*x53 + 2*x46*x52
    x55 = 2*x20
    x56 = x55*x6
    x57 = x21 - 1
    x58 = u2*x4*x57
    x59 = -x48
    x60 = x22 + 1
    x61 = x2*x50 + x59 + x60
    x62 = x4*x61
    x63 = u2_d1*x62 + x24*x53
    x64 = x1*x36*x49
    x65 = 2*x47 - 1
    x66 = 12*u2*x20*x37*(x42 + 2*x64 + x65)
    x67 = 2*u1_d1
    x68 = -x2*x33
    x69 = x10 - 3
    x70 = -x32
    x71 = x21*x32 + x60 + x70
    x72 = u2*x71
    x73 = 2*u2_d1*x72 + 2*x2*x35*x69
    x74 = lins_d1*u1
    x75 = 8*x9
    x76 = x37*(-3*x39 + x40 + x69)
    x77 = x37*(-x32*x39 + x39 + x47*x75 - x51 + x59 + x64*x75 + x70 + 1)
    x78 = u2_d1*x77 + 2*x34*x53*x76 + x45*x71
    x79 = -u2*x57
    x80 = u1_d1*x72 + x46*x61
    x81 = x48 - 3
    x82 = x45*x81
    x83 = x20*x26
    return ((x56*(lins_d1*x28 - u1_d1*(-lins_d1*x15 + x27*x44 + 12*x35*x38*(2*x12*x29 + x31 + x33)) - u2_d1*x54 - x0*x8 - x15*x17 - x18*x25), x56*(lins_d1*x63 - lins_d2*x58 - u1_d1*x54 - u2_d1*(-lins_d1*x62 + u1*x52*x67 + u2_d1*x29*x66) - x17*x25 - x18*x62), x56*(-u1*u1_d2*x8 + u1_d1*x28 + u2_d1*x63 - u2_d2*x58)),
            (x56*(-lins_d1*x73 - lins_d2*x68 + 2*u1*u1_d2*x16*x2*x6*x69 + 2*u2*u2_d2*x16*x71 - x26*x78 - x6*x67*(u1*x27*x76 + 3*u1_d1*x38*(8*u1**4*x11 - x75 + 1) + x2*x69*x74)), 4*x20*x6*(-lins_d1*x80 + u1*u2_d2*x16*x61 - u1_d1*x78 + u1_d2*u2*x16*x71 - u2_d1*(u1_d1*x77 + x46*x66 + x61*x74) - x0*x79), -x56*(2*u1*u2_d2*x79 + u1_d1*x73 + u1_d2*x68 + x26*x80)),
            (0, x55*(lins_d2*x65 + 2*u2*u2_d2*x16*x20*x81 - x82*x83 - x83*(3*u2_d1*x16*(8*u2**4*x49 - 8*x47 + 1) + x82)), x55*(-u2*u2_d1**2*x55*x81 + u2_d2*x65)))

def dq_B(s, g):
    u1, u2, lins, rho1, rho2, u3 = s
    l, l0, l1, l2, l3, l4 = g
    x0 = u3**2
    x1 = 1/(x0 + 1)
    x2 = 2*x1
    x3 = u3*x2
    x4 = x1*(x0 - 1)
    return ((0, -x3, rho2*x2*(x0*x2 - 1)),
            (-1, 0, 0),
            (0, x4, rho2*x3*(1 - x4)))

def dq_B_d1(s, sd, g):
    u1, u2, lins, rho1, rho2, u3 = s
    u1_d1, u2_d1, lins_d1, rho1_d1, rho2_d1, u3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = u3**2
    x1 = x0 + 1
    x2 = 1/x1
    x3 = x0*x2
    x4 = 2*x3 - 1
    x5 = 2*x2
    x6 = u3_d1*x5
    x7 = rho2*u3_d1
    x8 = x0 - 1
    x9 = u3*(x2*x8 - 1)
    return ((0, x4*x6, x5*(rho2_d1*x4 - u3*x5*x7*(4*x3 - 3))),
            (0, 0, 0),
            (0, -x6*x9, -x5*(rho2_d1*x9 + x7*(4*x0*x2 - 4*x0*x8/x1**2 + x2*x8 - 1))))

def dq_B_d2(s, sd, sdd, g):
    u1, u2, lins, rho1, rho2, u3 = s
    u1_d1, u2_d1, lins_d1, rho1_d1, rho2_d1, u3_d1 = sd
    u1_d2, u2_d2, lins_d2, rho1_d2, rho2_d2, u3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = u3**2
    x1 = x0 + 1
    x2 = 1/x1
    x3 = x0*x2
    x4 = 2*x3 - 1
    x5 = u3_d1**2
    x6 = 2*x2
    x7 = 4*x3
    x8 = u3*(x7 - 3)
    x9 = x6*x8
    x10 = rho2*u3_d2
    x11 = rho2_d1*x8
    x12 = x1**(-2)
    x13 = rho2*u3_d1
    x14 = x0 - 1
    x15 = x14*x2
    x16 = 1 - x15
    x17 = -x14
    x18 = x0*x12
    x19 = 4*x17*x18 - x17*x2 + x7 - 1
    x20 = rho2_d1*x19
    return ((0, x6*(u3_d2*x4 - x5*x9), x6*(rho2_d2*x4 - u3_d1*x11*x6 + 2*u3_d1*x2*(-x11 + 3*x13*(8*u3**4*x12 - 8*x3 + 1)) - x10*x9)),
            (0, 0, 0),
            (0, x6*(u3*u3_d2*x16 - x19*x5), x6*(rho2_d2*u3*x16 - u3_d1*x20 + u3_d1*(12*u3*x13*x2*(2*x0*x2 - 2*x14*x18 + x15 - 1) - x20) - x10*x19)))

def map_e_val(s, g):
    psi, th, lins = s
    l, l0, l1, l2, l3, l4 = g
    x0 = lins*cos(th)
    return (x0*cos(psi), x0*sin(psi), -lins*sin(th))

def map_e_jac(s, g):
    psi, th, lins = s
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(psi)
    x1 = cos(th)
    x2 = x0*x1
    x3 = cos(psi)
    x4 = sin(th)
    x5 = lins*x4
    x6 = x1*x3
    return ((-lins*x2, -x3*x5, x6),
            (lins*x6, -x0*x5, x2),
            (0, -lins*x1, -x4))

def map_e_d1(s, sd, g):
    psi, th, lins = s
    psi_d1, th_d1, lins_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(psi)
    x1 = cos(th)
    x2 = sin(psi)
    x3 = lins*x1
    x4 = psi_d1*x3
    x5 = sin(th)
    x6 = lins*th_d1*x5
    return (lins_d1*x0*x1 - x0*x6 - x2*x4, lins_d1*x1*x2 + x0*x4 - x2*x6, -lins_d1*x5 - th_d1*x3)

def map_e_bias2(s, sd, g):
    psi, th, lins = s
    psi_d1, th_d1, lins_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(th)
    x1 = sin(psi)
    x2 = x0*x1
    x3 = psi_d1*x2
    x4 = cos(psi)
    x5 = sin(th)
    x6 = x4*x5
    x7 = th_d1*x6
    x8 = x0*x4
    x9 = psi_d1*x8
    x10 = x1*x5
    x11 = th_d1*x10
    x12 = lins*th_d1
    x13 = lins*psi_d1
    return (-lins_d1*(x3 + x7) - psi_d1*(-lins*x11 + lins*x9 + lins_d1*x2) - th_d1*(lins_d1*x6 - x10*x13 + x12*x8), lins_d1*(-x11 + x9) - psi_d1*(lins*x3 + lins*x7 - lins_d1*x8) - th_d1*(lins_d1*x10 + x12*x2 + x13*x6), th_d1*(-2*lins_d1*x0 + x12*x5))

def map_e_bias3(s, sd, sdd, g):
    psi, th, lins = s
    psi_d1, th_d1, lins_d1 = sd
    psi_d2, th_d2, lins_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(th)
    x1 = sin(psi)
    x2 = x0*x1
    x3 = psi_d1*x2
    x4 = sin(th)
    x5 = cos(psi)
    x6 = x4*x5
    x7 = th_d1*x6
    x8 = x3 + x7
    x9 = lins_d1*x0
    x10 = x0*x5
    x11 = psi_d1*x10
    x12 = x1*x4
    x13 = th_d1*x12
    x14 = lins*x11 - lins*x13 + x1*x9
    x15 = 2*psi_d2
    x16 = lins_d1*x4
    x17 = th_d1*x10
    x18 = psi_d1*x12
    x19 = lins*x17 - lins*x18 + x16*x5
    x20 = 2*th_d2
    x21 = psi_d2*x2
    x22 = th_d2*x6
    x23 = x11 - x13
    x24 = -x17 + x18
    x25 = lins_d2*x0
    x26 = psi_d2*x10
    x27 = th_d2*x12
    x28 = psi_d1*x6
    x29 = th_d1*x2
    x30 = lins*x28 + lins*x29 + x1*x16
    x31 = lins*x3 + lins*x7 - x5*x9
    x32 = lins*psi_d2
    x33 = th_d2*x0
    x34 = lins*x33
    x35 = x28 + x29
    x36 = lins*th_d1
    return (-lins_d1*(psi_d1*x23 - th_d1*x24 + x21 + x22) - 2*lins_d2*x8 - psi_d1*(lins*x26 - lins*x27 + lins_d1*x23 - psi_d1*x31 - th_d1*x30 + x1*x25) + th_d1*(lins_d1*x24 - lins_d2*x6 + psi_d1*x30 + th_d1*x31 + x12*x32 - x34*x5) - x14*x15 - x19*x20, -lins_d1*(psi_d1*x8 + th_d1*x35 - x26 + x27) + 2*lins_d2*x23 - psi_d1*(lins*x21 + lins*x22 + lins_d1*x8 + psi_d1*x14 + th_d1*x19 - x25*x5) - th_d1*(lins_d1*x35 + lins_d2*x12 + psi_d1*x19 + th_d1*x14 + x1*x34 + x32*x6) - x15*x31 - x20*x30, lins_d1*(th_d1**2*x4 - x33) - 2*th_d1*x25 + th_d1*(lins*th_d2*x4 + th_d1*x16 + th_d1*(x0*x36 + x16) - x25) + x20*(x36*x4 - x9))

def map_p1_val(s, g):
    psi, th, lins = s
    l, l0, l1, l2, l3, l4 = g
    x0 = l - lins
    x1 = x0*cos(th)
    return (-x1*cos(psi), -x1*sin(psi), x0*sin(th))

def map_p1_jac(s, g):
    psi, th, lins = s
    l, l0, l1, l2, l3, l4 = g
    x0 = l - lins
    x1 = sin(psi)
    x2 = cos(th)
    x3 = x1*x2
    x4 = cos(psi)
    x5 = sin(th)
    x6 = x0*x5
    x7 = x2*x4
    return ((x0*x3, x4*x6, x7),
            (-x0*x7, x1*x6, x3),
            (0, x0*x2, -x5))

def map_p1_d1(s, sd, g):
    psi, th, lins = s
    psi_d1, th_d1, lins_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(psi)
    x1 = cos(th)
    x2 = lins_d1*x1
    x3 = sin(psi)
    x4 = l - lins
    x5 = psi_d1*x1*x4
    x6 = sin(th)
    x7 = th_d1*x4*x6
    return (x0*x2 + x0*x7 + x3*x5, -x0*x5 + x2*x3 + x3*x7, -lins_d1*x6 + th_d1*x1*x4)

def map_p1_bias2(s, sd, g):
    psi, th, lins = s
    psi_d1, th_d1, lins_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(th)
    x1 = sin(psi)
    x2 = x0*x1
    x3 = psi_d1*x2
    x4 = cos(psi)
    x5 = sin(th)
    x6 = x4*x5
    x7 = th_d1*x6
    x8 = l - lins
    x9 = -x8
    x10 = x0*x4
    x11 = psi_d1*x10
    x12 = x1*x5
    x13 = th_d1*x12
    x14 = th_d1*x9
    x15 = psi_d1*x9
    return (-lins_d1*(x3 + x7) - psi_d1*(lins_d1*x2 + x11*x9 - x13*x9) - th_d1*(lins_d1*x6 + x10*x14 - x12*x15), lins_d1*(x11 - x13) - psi_d1*(-lins_d1*x10 + x3*x9 + x7*x9) - th_d1*(lins_d1*x12 + x14*x2 + x15*x6), -th_d1*(2*lins_d1*x0 + th_d1*x5*x8))

def map_p1_bias3(s, sd, sdd, g):
    psi, th, lins = s
    psi_d1, th_d1, lins_d1 = sd
    psi_d2, th_d2, lins_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(th)
    x1 = sin(psi)
    x2 = x0*x1
    x3 = psi_d1*x2
    x4 = sin(th)
    x5 = cos(psi)
    x6 = x4*x5
    x7 = th_d1*x6
    x8 = x3 + x7
    x9 = lins_d1*x0
    x10 = x1*x9
    x11 = l - lins
    x12 = x1*x4
    x13 = th_d1*x12
    x14 = x0*x5
    x15 = psi_d1*x14
    x16 = lins_d1*x4
    x17 = x16*x5
    x18 = psi_d1*x12
    x19 = th_d1*x14
    x20 = 2*th_d2
    x21 = psi_d2*x2
    x22 = th_d2*x6
    x23 = -x13 + x15
    x24 = x18 - x19
    x25 = lins_d2*x0
    x26 = th_d2*x12
    x27 = psi_d2*x14
    x28 = x11*x3 + x11*x7 + x5*x9
    x29 = psi_d1*x6
    x30 = th_d1*x2
    x31 = -x1*x16 + x11*x29 + x11*x30
    x32 = -x31
    x33 = psi_d2*x11
    x34 = x29 + x30
    x35 = th_d2*x0
    x36 = -x11
    x37 = x17 - x18*x36 + x19*x36
    x38 = x10 - x13*x36 + x15*x36
    x39 = th_d1*x11
    return (-lins_d1*(psi_d1*x23 - th_d1*x24 + x21 + x22) - 2*lins_d2*x8 - psi_d1*(lins_d1*x23 + psi_d1*x28 - th_d1*x32 + x1*x25 + x11*x26 - x11*x27) - 2*psi_d2*(x10 + x11*x13 - x11*x15) + th_d1*(lins_d1*x24 - lins_d2*x6 - psi_d1*x31 - th_d1*x28 + th_d2*x0*x11*x5 - x12*x33) - x20*(x11*x18 - x11*x19 + x17), -lins_d1*(psi_d1*x8 + th_d1*x34 + x26 - x27) + 2*lins_d2*x23 - psi_d1*(lins_d1*x8 + psi_d1*x38 + th_d1*x37 - x11*x21 - x11*x22 - x25*x5) + 2*psi_d2*x28 - th_d1*(lins_d1*x34 + lins_d2*x12 + psi_d1*x37 + th_d1*x38 - x1*x11*x35 - x33*x6) - x20*x32, lins_d1*(th_d1**2*x4 - x35) - 2*th_d1*x25 + th_d1*(th_d1*x16 + th_d1*(-x0*x39 + x16) - th_d2*x11*x4 - x25) - x20*(x39*x4 + x9))

def map_p2_val(s, g):
    rho1, rho2, rho3 = s
    l, l0, l1, l2, l3, l4 = g
    return (-l0 + rho2*sin(rho3), rho1, rho2*cos(rho3))

def map_p2_jac(s, g):
    rho1, rho2, rho3 = s
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(rho3)
    x1 = cos(rho3)
    return ((0, x0, rho2*x1),
            (1, 0, 0),
            (0, x1, -rho2*x0))

def map_p2_d1(s, sd, g):
    rho1, rho2, rho3 = s
    rho1_d1, rho2_d1, rho3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = sin(rho3)
    x1 = cos(rho3)
    x2 = rho2*rho3_d1
    return (rho2_d1*x0 + x1*x2, rho1_d1, rho2_d1*x1 - x0*x2)

def map_p2_bias2(s, sd, g):
    rho1, rho2, rho3 = s
    rho1_d1, rho2_d1, rho3_d1 = sd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(rho3)
    x1 = sin(rho3)
    x2 = rho2*rho3_d1
    return (rho3_d1*(2*rho2_d1*x0 - x1*x2), 0, -rho3_d1*(2*rho2_d1*x1 + x0*x2))

def map_p2_bias3(s, sd, sdd, g):
    rho1, rho2, rho3 = s
    rho1_d1, rho2_d1, rho3_d1 = sd
    rho1_d2, rho2_d2, rho3_d2 = sdd
    l, l0, l1, l2, l3, l4 = g
    x0 = cos(rho3)
    x1 = rho3_d2*x0
    x2 = sin(rho3)
    x3 = rho3_d1**2
    x4 = rho2_d1*x0
    x5 = rho2*rho3_d1
    x6 = x2*x5 - x4
    x7 = 2*rho3_d2
    x8 = rho3_d2*x2
    x9 = rho2_d1*x2
    x10 = x0*x5 + x9
    x11 = rho2_d2*x2
    return (-rho2_d1*(-x1 + x2*x3) + 2*rho2_d2*rho3_d1*x0 - rho3_d1*(rho2*x8 - rho2_d2*x0 + rho3_d1*x10 + rho3_d1*x9) - x6*x7, 0, -rho2_d1*(x0*x3 + x8) - 2*rho3_d1*x11 - rho3_d1*(rho2*x1 + rho3_d1*x4 - rho3_d1*x6 + x11) - x10*x7)

