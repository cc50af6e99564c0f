"""Appendix coefficient formulas, generated by tools/gen_appendix.py. Do not edit.

Every entry is a function of the eight parameters plus s1 = sqrt(R1) and
s2 = sqrt(R2); half-integer powers of R1, R2 are written through s1, s2 so
that exact rational evaluation is possible when both are rational squares.
"""
from fractions import Fraction


def evaluate(R1, R2, w, t0, t1, t2, t3, t4, s1, s2):
    """Return a dict of the printed numerators/denominators and plain entries."""
    out = {}
    out['b'] = (s1*s2*t3 + (Fraction(1, 2))*t4*(s1**2 + s2**2) - Fraction(1, 2)*w*(-s1**2*t2 + s2**2*t1))/(s1**2*s2**2)
    out['at1'] = (-Fraction(1, 2)*t4*(s1**2 - s2**2) - Fraction(1, 2)*w*(s1**2*t2 + s2**2*t1))/(s1**2*s2**2)
    out['at2'] = (-s1*s2*t3 + (Fraction(1, 2))*t4*(s1**2 + s2**2) - Fraction(1, 2)*w*(-s1**2*t2 + s2**2*t1))/(s1**2*s2**2)
    out['at3n'] = 2*s1**8*t0*(t2*w + t4)**2 + s1**6*s2**2*(t3**2*(4*t0 + 3*t2*w + 3*t4) - (2*t2*w + 2*t4)*(2*t0*w*(t1 + t2) + t2*t4*w + t4**2)) + s1**4*s2**4*(2*t0*w**2*(t1**2 + 4*t1*t2 + t2**2) + t3**2*(-8*t0 - 3*t1*w + 3*t2*w + 2*t4) - 4*t4**3 + t4**2*(-4*t0 + 4*t1*w - 4*t2*w) + 4*t4*w*(t0*t1 - t0*t2 + t1*t2*w)) + s1**2*s2**6*(t3**2*(4*t0 - 3*t1*w + 3*t4) - (-2*t1*w + 2*t4)*(-2*t0*w*(t1 + t2) - t1*t4*w + t4**2)) + 2*s2**8*t0*(-t1*w + t4)**2
    out['at3d'] = 3*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**2
    out['at4'] = -Fraction(1, 2)*(s1**2 - s2**2)*(s1**2*s2**2*t3**2 + 2*t0*t4*(s1**2 + s2**2)**2 + 2*t0*w*(s1**4*t2 + s1**2*s2**2*(-t1 + t2) - s2**4*t1))/(s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4)))
    out['at5'] = ((Fraction(1, 3))*s1**4*t0 + (Fraction(1, 6))*s1**2*s2**2*(2*t0 + t4) + (Fraction(1, 3))*s2**4*t0)/(s1**4*s2**4)
    out['at6n'] = -3*s1**14*t0*(t2*w + t4)**3*(2*t0 + t2*w + t4) + 58*s1**13*s2*t0*t3*(t2*w + t4)**2*(2*t0 + t2*w + t4) + s1**12*s2**2*(t2*w + t4)*(t3**2*(-88*t0**2 - 2*t0*(46*t2*w + 46*t4) - 18*(t2*w + t4)**2) + (3*t2*w + 3*t4)*(t0**2*(6*t1*w + 8*t2*w + 2*t4) + t0*(t2*w + t4)*(3*t1*w + 2*t2*w + 3*t4) + t4*(t2*w + t4)**2)) + 2*s1**11*s2**3*t3*(t3**2*(40*t0**2 + t0*(68*t2*w + 68*t4) + 30*(t2*w + t4)**2) - (29*t2*w + 29*t4)*(t0**2*(4*t1*w + 8*t2*w + 4*t4) + t0*(2*t2*w + 2*t4)*(t1*w + t2*w + 2*t4) + t4*(t2*w + t4)**2)) + s1**10*s2**4*(t3**4*(6*t2*w + 6*t4) + t3**2*(t0**2*(88*t1*w + 352*t2*w + 264*t4) + 2*t0*(2*t2*w + 2*t4)*(35*t1*w + 34*t2*w + 43*t4) + (t2*w + t4)**2*(30*t1*w - 36*t2*w + 26*t4)) + (3*t2*w + 3*t4)*(t0**2*(-6*t1**2*w**2 - 12*t1*w*(2*t2*w + t4) - 12*t2**2*w**2 + 6*t4**2) - t0*(t2*w + t4)*(3*t1**2*w**2 + t1*w*(5*t2*w + 11*t4) + t2**2*w**2 + 5*t2*t4*w - 5*t4**2) - t4*(3*t1*w - t4)*(t2*w + t4)**2)) + 2*s1**9*s2**5*t3*(t0**2*(58*t1**2*w**2 + 116*t1*w*(4*t2*w + 3*t4) + 348*t2**2*w**2 + 232*t2*t4*w - 58*t4**2) + 29*t0*(t2*w + t4)*(t1**2*w**2 + 3*t1*w*(t2*w + 3*t4) + t2**2*w**2 + 7*t2*t4*w - t4**2) + 58*t1*t4*w*(t2*w + t4)**2 + 6*t3**4 + t3**2*(-160*t0**2 - 4*t0*(12*t1*w + 22*t2*w + 30*t4) - 4*(t2*w + t4)*(9*t1*w - 3*t2*w + 5*t4))) + s1**8*s2**6*(-t0**2*(-6*t1**3*w**3 + t1**2*w**2*(-72*t2*w - 54*t4) - 18*t1*w*(6*t2**2*w**2 + 4*t2*t4*w - t4**2) - 24*t2**3*w**3 + 36*t2**2*t4*w**2 + 72*t2*t4**2*w + 18*t4**3) + 3*t0*(t2*w + t4)*(t1**3*w**3 + t1**2*w**2*(3*t2*w + 12*t4) + t1*w*(t2**2*w**2 + 20*t2*t4*w - 2*t4**2) + t4*(3*t2**2*w**2 - 15*t2*t4*w - 7*t4**2)) - t3**4*(6*t1*w + 12*t2*w + 6*t4) - t3**2*(t0**2*(352*t1*w + 528*t2*w + 176*t4) + 2*t0*(24*t1**2*w**2 + 10*t1*w*(7*t2*w + 11*t4) - 2*t2**2*w**2 + 102*t2*t4*w + 40*t4**2) + 2*(t2*w + t4)*(3*t1**2*w**2 + 2*t1*w*(-27*t2*w + 5*t4) - 3*t2**2*w**2 + 24*t2*t4*w + 4*t4**2)) + 3*t4*(t1*w - t4)*(t2*w + t4)**2*(3*t1*w - t2*w + 2*t4)) - 2*s1**7*s2**7*t3*(t0**2*(232*t1**2*w**2 + 232*t1*w*(3*t2*w + t4) + 232*t2**2*w**2 - 232*t2*t4*w - 232*t4**2) + 116*t0*t4*(t1**2*w**2 + 2*t1*w*(2*t2*w + t4) + t2**2*w**2 - 2*t2*t4*w - 2*t4**2) + 12*t3**4 + t3**2*(-240*t0**2 - 104*t0*t4 - 28*t0*w*(t1 - t2) + 20*t4**2 + 2*t4*w*(-6*t1 + 6*t2) + w**2*(-6*t1**2 + 24*t1*t2 - 6*t2**2)) + 29*t4*(t1*w - t4)*(t2*w + t4)*(t1*w - t2*w + 2*t4)) + s1**6*s2**8*(t0**2*(-24*t1**3*w**3 + t1**2*w**2*(-108*t2*w - 36*t4) - 72*t1*w*(t2**2*w**2 - t2*t4*w - t4**2) - 6*t2**3*w**3 + 54*t2**2*t4*w**2 + 18*t2*t4**2*w - 18*t4**3) + 3*t0*(t1**3*w**3*(t2*w - 3*t4) + t1**2*w**2*(3*t2**2*w**2 - 21*t2*t4*w - 12*t4**2) + t1*w*(t2**3*w**3 - 15*t2**2*t4*w**2 + 18*t2*t4**2*w + 22*t4**3) + t4*(-t2**3*w**3 + 12*t2**2*t4*w**2 + 2*t2*t4**2*w - 7*t4**3)) + t3**4*(12*t1*w + 6*t2*w - 6*t4) + t3**2*(t0**2*(528*t1*w + 352*t2*w - 176*t4) + 2*t0*(2*t1**2*w**2 + 2*t1*w*(-35*t2*w + 51*t4) - 24*t2**2*w**2 + 110*t2*t4*w - 40*t4**2) - 2*(t1*w - t4)*(3*t1**2*w**2 + 6*t1*w*(9*t2*w + 4*t4) - 3*t2**2*w**2 + 10*t2*t4*w - 4*t4**2)) - 3*t4*(-t1*w + t4)**2*(t2*w + t4)*(t1*w - 3*t2*w + 2*t4)) + 2*s1**5*s2**9*t3*(t0**2*(348*t1**2*w**2 + 232*t1*w*(2*t2*w - t4) + 58*t2**2*w**2 - 348*t2*t4*w - 58*t4**2) - 29*t0*(t1*w - t4)*(t1**2*w**2 + t1*w*(3*t2*w - 7*t4) + t2**2*w**2 - 9*t2*t4*w - t4**2) - 58*t2*t4*w*(-t1*w + t4)**2 + 6*t3**4 + t3**2*(-160*t0**2 + 4*t0*(22*t1*w + 12*t2*w - 30*t4) + 4*(t1*w - t4)*(3*t1*w - 9*t2*w + 5*t4))) + s1**4*s2**10*(t3**4*(-6*t1*w + 6*t4) + t3**2*(t0**2*(-352*t1*w - 88*t2*w + 264*t4) + 2*t0*(2*t1*w - 2*t4)*(34*t1*w + 35*t2*w - 43*t4) + (-t1*w + t4)**2*(36*t1*w - 30*t2*w + 26*t4)) + (-3*t1*w + 3*t4)*(t0**2*(-12*t1**2*w**2 - 24*t1*t2*w**2 - 6*t2**2*w**2 + 12*t2*t4*w + 6*t4**2) + t0*(t1*w - t4)*(t1**2*w**2 + 5*t1*w*(t2*w - t4) + 3*t2**2*w**2 - 11*t2*t4*w - 5*t4**2) + t4*(-t1*w + t4)**2*(3*t2*w + t4))) + 2*s1**3*s2**11*t3*(t3**2*(40*t0**2 - t0*(68*t1*w - 68*t4) + 30*(-t1*w + t4)**2) - (-29*t1*w + 29*t4)*(t0**2*(-8*t1*w - 4*t2*w + 4*t4) + t0*(2*t1*w - 2*t4)*(t1*w + t2*w - 2*t4) + t4*(-t1*w + t4)**2)) + s1**2*s2**12*(-t1*w + t4)*(t3**2*(-88*t0**2 + 2*t0*(46*t1*w - 46*t4) - 18*(-t1*w + t4)**2) + (-3*t1*w + 3*t4)*(t0**2*(-8*t1*w - 6*t2*w + 2*t4) + t0*(t1*w - t4)*(2*t1*w + 3*t2*w - 3*t4) + t4*(-t1*w + t4)**2)) + 58*s1*s2**13*t0*t3*(-t1*w + t4)**2*(2*t0 - t1*w + t4) + 3*s2**14*t0*(t1*w - t4)**3*(2*t0 - t1*w + t4)
    out['at6d'] = 60*s1**6*s2**6*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**4
    out['at7n'] = -64*s1**12*t0**2*(t2*w + t4)**2 - 16*s1**11*s2*t0*t3*(t2*w + t4)*(-5*t0 + t2*w + t4) + s1**10*s2**2*(64*t0*(t2*w + t4)*(2*t0*w*(t1 + t2) + t2*t4*w + t4**2) + t3**2*(-64*t0**2 - 76*t0*t2*w - 76*t0*t4 + 9*t2**2*w**2 + 18*t2*t4*w + 9*t4**2)) - 2*s1**9*s2**3*t3*(4*t0*w*(10*t0*t1 + 20*t0*t2 + 3*t1*t2*w - 5*t2**2*w) + t3**2*(-40*t0 + 3*t2*w + 3*t4) - 8*t4**3 + t4**2*(8*t0 - 16*t2*w) + t4*(40*t0**2 + 12*t0*w*(t1 - t2) - 8*t2**2*w**2)) + s1**8*s2**4*(64*t0*(-t1*w + t4)*(t0*w*(t1 + 4*t2) + 2*t4**2 + t4*(3*t0 + 2*t2*w)) - 24*t3**4 - 2*t3**2*(-64*t0**2 - 54*t0*t1*w + 14*t0*t2*w + 36*t0*t4 - 3*t2**2*w**2 - 8*t2*t4*w - 5*t4**2)) - 2*s1**7*s2**5*t3*(-4*t0*w*(20*t0*t1 + 5*t1**2*w - 3*t1*t2*w + 2*t2**2*w) - 16*t2*t4**2*w + t3**2*(24*t0 + 9*t1*w + 12*t2*w + 19*t4) - 8*t4**3 - 4*t4*(-20*t0**2 - 3*t0*t1*w + 7*t0*t2*w + 2*t2**2*w**2)) - s1**6*s2**6*w*(t1 + t2)*(64*t0*(2*t0 + t4)*(2*t4 + w*(-t1 + t2)) + t3**2*(4*t0 + 9*t1*w - 9*t2*w + 18*t4)) + 2*s1**5*s2**7*t3*(-4*t0*w*(-20*t0*t2 + 2*t1**2*w - 3*t1*t2*w + 5*t2**2*w) + 16*t1*t4**2*w + t3**2*(24*t0 - 12*t1*w - 9*t2*w + 19*t4) - 8*t4**3 - 4*t4*(-20*t0**2 - 7*t0*t1*w + 3*t0*t2*w + 2*t1**2*w**2)) + s1**4*s2**8*(-64*t0*(t2*w + t4)*(-t0*w*(4*t1 + t2) + 2*t4**2 + t4*(3*t0 - 2*t1*w)) + 24*t3**4 + 2*t3**2*(-64*t0**2 - 14*t0*t1*w + 54*t0*t2*w + 36*t0*t4 - 3*t1**2*w**2 + 8*t1*t4*w - 5*t4**2)) + 2*s1**3*s2**9*t3*(-4*t0*w*(20*t0*t1 + 10*t0*t2 + 5*t1**2*w - 3*t1*t2*w) + t3**2*(-40*t0 - 3*t1*w + 3*t4) - 8*t4**3 + t4**2*(8*t0 + 16*t1*w) - 4*t4*(-10*t0**2 + 3*t0*w*(-t1 + t2) + 2*t1**2*w**2)) + s1**2*s2**10*(64*t0*(-t1*w + t4)*(2*t0*w*(t1 + t2) + t1*t4*w - t4**2) + t3**2*(64*t0**2 - 76*t0*t1*w + 76*t0*t4 - 9*t1**2*w**2 + 18*t1*t4*w - 9*t4**2)) + 16*s1*s2**11*t0*t3*(-t1*w + t4)*(-5*t0 - t1*w + t4) + 64*s2**12*t0**2*(-t1*w + t4)**2
    out['at7d'] = 24*s1**6*s2**6*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**3
    out['at8n'] = 3*s1**12*t0*(t2*w + t4)**2*(162*t0 + t2*w + t4) + 4*s1**11*s2*t0*t3*(t2*w + t4)*(134*t0 + 7*t2*w + 7*t4) + s1**10*s2**2*(-t3**2*(920*t0**2 - 368*t0*t2*w - 368*t0*t4 + 27*t2**2*w**2 + 54*t2*t4*w + 27*t4**2) - (3*t2*w + 3*t4)*(2*t0*w*(162*t0*t1 + 4*t0*t2 + t1*t2*w + t2**2*w) + t4**3 + t4**2*(4*t0 + 2*t2*w) + t4*(-316*t0**2 + 2*t0*w*(t1 + 3*t2) + t2**2*w**2))) - 4*s1**9*s2**3*t3*(t0*w*(134*t0*t1 + 56*t0*t2 - 53*t1*t2*w - 46*t2**2*w) + t3**2*(-180*t0 + 21*t2*w + 21*t4) + 7*t4**3 + t4**2*(35*t0 + 14*t2*w) - t4*(78*t0**2 + 53*t0*t1*w + 11*t0*t2*w - 7*t2**2*w**2)) + s1**8*s2**4*(3*t0*w**2*(t1**2*(162*t0 + t2*w) + t1*t2*(16*t0 + 3*t2*w) + t2**2*(-308*t0 + t2*w)) - 84*t3**4 + t3**2*(-160*t0**2 + 2*t0*(66*t1*w + 46*t2*w) + 6*t2*w**2*(-2*t1 + t2) + 10*t4**2 + 2*t4*(-60*t0 - 6*t1*w + 8*t2*w)) + t4**3*(-3*t0 + 6*t1*w) + t4**2*(-486*t0**2 + 27*t0*t1*w + 18*t0*t2*w + 12*t1*t2*w**2) + 3*t4*w*(t0*t1**2*w + 8*t0*t2*(-79*t0 + t2*w) + t1*(-308*t0**2 + 12*t0*t2*w + 2*t2**2*w**2))) + 4*s1**7*s2**5*t3*(t0*w*(56*t0*t1 - 156*t0*t2 - 60*t1**2*w - 53*t1*t2*w + 7*t2**2*w) + t3**2*(-180*t0 - 9*t1*w + 42*t2*w + 51*t4) + 7*t4**3 + t4**2*(28*t0 + 7*w*(t1 + t2)) + t4*(-212*t0**2 + t0*w*(95*t1 + 123*t2) + 7*t1*t2*w**2)) + s1**6*s2**6*(t0**2*w**2*(-24*t1**2 + 1848*t1*t2 - 24*t2**2) + 288*t3**4 + t3**2*(2160*t0**2 + 328*t0*w*(t1 - t2) + 154*t4**2 - t4*(496*t0 + 102*w*(t1 - t2)) + w**2*(39*t1**2 - 12*t1*t2 + 39*t2**2)) + 6*t4**4 + t4**3*(24*t0 - 3*w*(t1 - t2)) + t4**2*(-1896*t0**2 - 24*t0*w*(t1 - t2) + w**2*(-3*t1**2 - 3*t2**2)) - 3*t4*w*(4*t0*t2*(158*t0 + t2*w) + t1**2*w*(4*t0 + t2*w) - t1*(632*t0**2 - 16*t0*t2*w + t2**2*w**2))) + 4*s1**5*s2**7*t3*(t0*w*(156*t0*t1 - 56*t0*t2 + 7*t1**2*w - 53*t1*t2*w - 60*t2**2*w) + t3**2*(-180*t0 - 42*t1*w + 9*t2*w + 51*t4) + 7*t4**3 + t4**2*(28*t0 - 7*w*(t1 + t2)) - t4*(212*t0**2 + t0*w*(123*t1 + 95*t2) - 7*t1*t2*w**2)) + s1**4*s2**8*(-3*t0*w**2*(-162*t0*t2**2 + t1**3*w + t1**2*(308*t0 + 3*t2*w) + t1*t2*(-16*t0 + t2*w)) - 84*t3**4 - t3**2*(160*t0**2 + 4*t0*w*(23*t1 + 33*t2) - 6*t1*w**2*(t1 - 2*t2) - 10*t4**2 - 2*t4*(-60*t0 - 8*t1*w + 6*t2*w)) - t4**3*(3*t0 + 6*t2*w) - t4**2*(486*t0**2 + 18*t0*t1*w + 27*t0*t2*w - 12*t1*t2*w**2) + 3*t4*w*(4*t0*t1*(158*t0 + 3*t2*w) + t0*t2*(308*t0 + t2*w) - 2*t1**2*w*(-4*t0 + t2*w))) - 4*s1**3*s2**9*t3*(-t0*w*(56*t0*t1 + 134*t0*t2 + 46*t1**2*w + 53*t1*t2*w) + t3**2*(-180*t0 - 21*t1*w + 21*t4) + 7*t4**3 + t4**2*(35*t0 - 14*t1*w) + t4*(-78*t0**2 + 11*t0*t1*w + 53*t0*t2*w + 7*t1**2*w**2)) + s1**2*s2**10*(-t3**2*(920*t0**2 + 368*t0*t1*w - 368*t0*t4 + 27*t1**2*w**2 - 54*t1*t4*w + 27*t4**2) - (-3*t1*w + 3*t4)*(2*t0*w*(-4*t0*t1 - 162*t0*t2 + t1**2*w + t1*t2*w) + t4**3 + t4**2*(4*t0 - 2*t1*w) + t4*(-316*t0**2 - 2*t0*w*(3*t1 + t2) + t1**2*w**2))) + 4*s1*s2**11*t0*t3*(-t1*w + t4)*(134*t0 - 7*t1*w + 7*t4) + 3*s2**12*t0*(-t1*w + t4)**2*(162*t0 - t1*w + t4)
    out['at8d'] = 240*s1**6*s2**6*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**3
    out['e1n'] = -10*s1**6*t0*(t2*w + t4) + s1**5*s2*t3*(4*t0 + 3*t2*w + 3*t4) + s1**4*s2**2*(10*t0*(t1*w + 2*t2*w + t4) - 6*t3**2 + 10*t4*(t2*w + t4)) + s1**3*s2**3*t3*(-8*t0 - 3*t1*w + 3*t2*w + 2*t4) + s1**2*s2**4*(-10*t0*(2*t1*w + t2*w - t4) - 10*t1*t4*w - 6*t3**2 + 10*t4**2) + s1*s2**5*t3*(4*t0 - 3*t1*w + 3*t4) + 10*s2**6*t0*(t1*w - t4)
    out['e1d'] = 12*s1**2*s2**2*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**2
    out['e2'] = (-Fraction(1, 2)*s1**4*t0 + (Fraction(1, 4))*s1**3*s2*t3 + (Fraction(1, 4))*s1**2*s2**2*(4*t0 + 2*t4) + (Fraction(1, 4))*s1*s2**3*t3 - Fraction(1, 2)*s2**4*t0)/(s1**2*s2**2*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4)))
    out['e3'] = (Fraction(1, 4))*(s1**2 - s2**2)*(-s1*s2*t3 + t0*(4*s1**2 + 4*s2**2))/(s1**2*s2**2*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4)))
    out['f1n'] = 296*s1**12*t0*(t2*w + t4)**2*(2*t0 + t2*w + t4) - s1**11*s2*t3*(t2*w + t4)*(1088*t0**2 + t0*(664*t2*w + 664*t4) + 45*(t2*w + t4)**2) + s1**10*s2**2*(2*t3**2*(800*t0**2 + t0*(928*t2*w + 928*t4) + 243*(t2*w + t4)**2) - 2*(148*t2*w + 148*t4)*(t0**2*(4*t1*w + 8*t2*w + 4*t4) + t0*(2*t4 + w*(t1 + t2))*(2*t2*w + 2*t4) + t4*(t2*w + t4)**2)) + s1**9*s2**3*t3*(t0**2*(1088*t1*w + 4352*t2*w + 3264*t4) + t0*(-480*t3**2 + 8*(t2*w + t4)*(98*t1*w + 151*t2*w + 325*t4)) + (-348*t3**2 + (t2*w + t4)*(75*t1*w - 90*t2*w + 499*t4))*(t2*w + t4)) + s1**8*s2**4*(4*t0**2*(-148*t4**2 + 148*t4*w*(6*t1 + 4*t2) + w**2*(148*t1**2 + 1184*t1*t2 + 888*t2**2)) + 296*t0*(t2*w + t4)*(-t4**2 + t4*w*(9*t1 + 7*t2) + w**2*(t1**2 + 3*t1*t2 + t2**2)) + 592*t1*t4*w*(t2*w + t4)**2 + 72*t3**4 + 4*t3**2*(-1600*t0**2 - t0*(264*t1*w + 664*t2*w + 1200*t4) - (t2*w + t4)*(111*t1*w - 153*t2*w + 200*t4))) + s1**7*s2**5*t3*(t3**2*(480*t0 + 108*t1*w - 24*t2*w + 348*t4) - 454*t4**3 + t4**2*(-1936*t0 - 484*t1*w - 574*t2*w) - t4*(2176*t0**2 + 32*t0*w*(85*t1 + 138*t2) + w**2*(15*t1**2 + 214*t1*t2 + 105*t2**2)) - w*(t0**2*(4352*t1 + 6528*t2) + 8*t0*w*(15*t1**2 + 98*t1*t2 + 53*t2**2) - 15*t2*w**2*(-t1**2 + 18*t1*t2 + t2**2))) + s1**6*s2**6*(-2*t0**2*(-1184*t4**2 + 1184*t4*w*(t1 - t2) + w**2*(1184*t1**2 + 3552*t1*t2 + 1184*t2**2)) - 1184*t0*t4*(-2*t4**2 + t4*w*(2*t1 - 2*t2) + w**2*(t1**2 + 4*t1*t2 + t2**2)) - 144*t3**4 - 2*t3**2*(-4800*t0**2 - 128*t0*(t1*w - t2*w + 23*t4) - 314*t4**2 + t4*w*(42*t1 - 42*t2) + w**2*(21*t1**2 + 612*t1*t2 + 21*t2**2)) - 296*t4*(t1*w - t4)*(t2*w + t4)*(t1*w - t2*w + 2*t4)) + s1**5*s2**7*t3*(t3**2*(480*t0 + 24*t1*w - 108*t2*w + 348*t4) - 454*t4**3 + t4**2*(-1936*t0 + 574*t1*w + 484*t2*w) - t4*(2176*t0**2 - 32*t0*w*(138*t1 + 85*t2) + w**2*(105*t1**2 + 214*t1*t2 + 15*t2**2)) - w*(t0**2*(-6528*t1 - 4352*t2) + 8*t0*w*(53*t1**2 + 98*t1*t2 + 15*t2**2) + 15*t1*w**2*(t1**2 + 18*t1*t2 - t2**2))) + s1**4*s2**8*(4*t0**2*(-148*t4**2 - 148*t4*w*(4*t1 + 6*t2) + w**2*(888*t1**2 + 1184*t1*t2 + 148*t2**2)) - 296*t0*(t1*w - t4)*(-t4**2 - t4*w*(7*t1 + 9*t2) + w**2*(t1**2 + 3*t1*t2 + t2**2)) - 592*t2*t4*w*(-t1*w + t4)**2 + 72*t3**4 + 4*t3**2*(-1600*t0**2 + t0*(664*t1*w + 264*t2*w - 1200*t4) + (t1*w - t4)*(153*t1*w - 111*t2*w + 200*t4))) + s1**3*s2**9*t3*(t0**2*(-4352*t1*w - 1088*t2*w + 3264*t4) + t0*(-480*t3**2 + 8*(t1*w - t4)*(151*t1*w + 98*t2*w - 325*t4)) + (348*t3**2 + (t1*w - t4)*(90*t1*w - 75*t2*w + 499*t4))*(t1*w - t4)) + s1**2*s2**10*(2*t3**2*(800*t0**2 + t0*(-928*t1*w + 928*t4) + 243*(-t1*w + t4)**2) - 2*(-148*t1*w + 148*t4)*(t0**2*(4*t4 - 4*w*(2*t1 + t2)) + t0*(-2*t4 + w*(t1 + t2))*(2*t1*w - 2*t4) + t4*(-t1*w + t4)**2)) + s1*s2**11*t3*(t1*w - t4)*(1088*t0**2 + t0*(-664*t1*w + 664*t4) + 45*(-t1*w + t4)**2) + 296*s2**12*t0*(-t1*w + t4)**2*(2*t0 - t1*w + t4)
    out['f1d'] = 960*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**4
    out['f2n'] = 32*s1**10*t0*(t2*w + t4)*(7*t0 - 2*t2*w - 2*t4) + s1**9*s2*t3*(-128*t0**2 - t0*(36*t2*w + 36*t4) + 15*(t2*w + t4)**2) + s1**8*s2**2*(-8*t0**2*(28*t1*w + 56*t2*w + 28*t4) + 8*t0*(29*t3**2 + (2*t2*w + 2*t4)*(4*t1*w + 5*t2*w - 13*t4)) + 8*(-6*t3**2 + 5*t4*(t2*w + t4))*(t2*w + t4)) - 2*s1**7*s2**3*t3*(-128*t0**2 + t0*(-98*t1*w + 58*t2*w + 92*t4) + 30*t3**2 + (3*t2*w + 3*t4)*(2*t1*w - t2*w + 3*t4)) + s1**6*s2**4*(-4*t0**2*(-112*t1*w + 112*t4) - 4*t0*(4*t2*w**2*(6*t1 + t2) + 36*t4**2 - 4*t4*w*(8*t1 + 4*t2)) - 4*t3**2*(30*t0 + 9*t1*w + 15*t2*w + 28*t4) - 4*t4*(10*t1*w - 10*t4)*(t2*w + t4)) - s1**5*s2**5*t3*w*(t1 + t2)*(44*t0 + 3*t1*w - 3*t2*w + 70*t4) + s1**4*s2**6*(4*t0**2*(112*t2*w + 112*t4) + 4*t0*(4*t1*w**2*(t1 + 6*t2) + 36*t4**2 + 4*t4*w*(4*t1 + 8*t2)) + 4*t3**2*(30*t0 - 15*t1*w - 9*t2*w + 28*t4) + 4*t4*(10*t1*w - 10*t4)*(t2*w + t4)) + 2*s1**3*s2**7*t3*(-128*t0**2 + t0*(-58*t1*w + 98*t2*w + 92*t4) + 30*t3**2 - (3*t1*w - 3*t4)*(t1*w - 2*t2*w + 3*t4)) + s1**2*s2**8*(8*t0**2*(-56*t1*w - 28*t2*w + 28*t4) - 8*t0*(29*t3**2 + (2*t1*w - 2*t4)*(5*t1*w + 4*t2*w + 13*t4)) - 8*(6*t3**2 + t4*(5*t1*w - 5*t4))*(t1*w - t4)) + s1*s2**9*t3*(128*t0**2 + t0*(-36*t1*w + 36*t4) - 15*(-t1*w + t4)**2) + 32*s2**10*t0*(t1*w - t4)*(7*t0 + 2*t1*w - 2*t4)
    out['f2d'] = 96*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**3
    out['f3n'] = 8*s1**8*t0*(2*t0 + t2*w + t4) - s1**7*s2*t3*(8*t0 + 3*t2*w + 3*t4) + s1**6*s2**2*(2*t3**2 - 2*(8*t0 + 4*t4)*(4*t0 + t2*w + t4)) + s1**5*s2**3*t3*(8*t0 + 3*t4 + w*(-t1 - 6*t2)) + s1**4*s2**4*(96*t0**2 + 4*t0*(-2*t1*w + 2*t2*w + 20*t4) - 4*t3**2 + 16*t4**2) + s1**3*s2**5*t3*(8*t0 + 6*t1*w + t2*w + 3*t4) + s1**2*s2**6*(2*t3**2 - 2*(8*t0 + 4*t4)*(4*t0 - t1*w + t4)) + s1*s2**7*t3*(-8*t0 + 3*t1*w - 3*t4) + 8*s2**8*t0*(2*t0 - t1*w + t4)
    out['f3d'] = 64*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**2
    out['f4n'] = -16*s1**8*t0*(t2*w + t4) + s1**7*s2*t3*(-12*t0 + 5*t2*w + 5*t4) + s1**6*s2**2*(2*t3**2 + 2*(8*t0 + 4*t4)*(t2*w + t4)) + s1**5*s2**3*t3*(4*t0 + t1*w + 2*t2*w + 5*t4) + s1**3*s2**5*t3*(-4*t0 + 2*t1*w + t2*w - 5*t4) + s1**2*s2**6*(-2*t3**2 - 2*(8*t0 + 4*t4)*(-t1*w + t4)) + s1*s2**7*t3*(12*t0 + 5*t1*w - 5*t4) + 16*s2**8*t0*(-t1*w + t4)
    out['f4d'] = 32*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**2
    out['f5n'] = 32*s1**10*t0*(t2*w + t4)*(-10*t0 + 7*t2*w + 7*t4) - s1**9*s2*t3*(832*t0**2 - t0*(616*t2*w + 616*t4) + 51*(t2*w + t4)**2) + s1**8*s2**2*(-2*t0**2*(-160*t1*w + 128*t2*w + 288*t4) - 32*t0*(t2*w + t4)*(7*t1*w + 2*t2*w - t4) - 2*t3**2*(-312*t0 + 45*t2*w + 45*t4) - 32*t4*(t2*w + t4)**2) + 2*s1**7*s2**3*t3*(128*t0**2 - t0*(132*t1*w + 100*t2*w - 96*t4) - 36*t3**2 + (4*t4 + 3*w*(t1 + t2))*(7*t2*w + 7*t4)) + s1**6*s2**4*(2*t0**2*(128*t1*w + 576*t2*w + 448*t4) + 32*t0*(t2*w**2*(7*t1 - 5*t2) - 8*t4**2 + t4*w*(11*t1 - 9*t2)) + 2*t3**2*(-312*t0 + 9*t1*w + 126*t2*w + 93*t4) + 32*t4*(t1*w + t4)*(t2*w + t4)) + s1**5*s2**5*t3*(1152*t0**2 + 8*t0*(-202*t4 + 85*w*(t1 - t2)) + 240*t3**2 + 86*t4**2 + t4*w*(-126*t1 + 126*t2) + w**2*(9*t1**2 - 84*t1*t2 + 9*t2**2)) + s1**4*s2**6*(2*t0**2*(-576*t1*w - 128*t2*w + 448*t4) - 32*t0*(t1*w**2*(5*t1 - 7*t2) + 8*t4**2 + t4*w*(-9*t1 + 11*t2)) + 2*t3**2*(-312*t0 - 126*t1*w - 9*t2*w + 93*t4) + 32*t4*(t1*w - t4)*(t2*w - t4)) + 2*s1**3*s2**7*t3*(128*t0**2 + t0*(100*t1*w + 132*t2*w + 96*t4) - 36*t3**2 + (-4*t4 + 3*w*(t1 + t2))*(7*t1*w - 7*t4)) + s1**2*s2**8*(2*t0**2*(128*t1*w - 160*t2*w - 288*t4) - 32*t0*(t1*w - t4)*(2*t1*w + 7*t2*w + t4) + 2*t3**2*(312*t0 + 45*t1*w - 45*t4) - 32*t4*(-t1*w + t4)**2) - s1*s2**9*t3*(832*t0**2 + t0*(616*t1*w - 616*t4) + 51*(-t1*w + t4)**2) + 32*s2**10*t0*(t1*w - t4)*(10*t0 + 7*t1*w - 7*t4)
    out['f5d'] = 384*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**3
    out['f6n'] = 8*s1**10*t0*(t2*w + t4)*(2*t0 + t2*w + t4) + s1**9*s2*t3*(-224*t0**2 - t0*(112*t2*w + 112*t4) + 3*(t2*w + t4)**2) + s1**8*s2**2*(2*t0**2*(-8*t1*w - 32*t2*w - 24*t4) - 8*t0*(t2*w + t4)*(t1*w + 2*t2*w + 5*t4) + 2*t3**2*(64*t0 + 33*t2*w + 33*t4) - 8*t4*(t2*w + t4)**2) + 2*s1**7*s2**3*t3*(448*t0**2 + t0*(112*t2*w + 336*t4) - 4*t3**2 - (-56*t4 + 3*w*(t1 + t2))*(t2*w + t4)) + s1**6*s2**4*(2*t0**2*(32*t1*w + 48*t2*w + 16*t4) + 8*t0*(t2*w**2*(t1 + t2) + 4*t4**2 + t4*w*(5*t1 + 9*t2)) + 2*t3**2*(-64*t0 - t1*w + 30*t2*w - 33*t4) + 8*t4*(t1*w + t4)*(t2*w + t4)) + s1**5*s2**5*t3*(-1344*t0**2 + 112*t0*(t1*w - t2*w - 10*t4) + 16*t3**2 - 230*t4**2 + t4*w*(6*t1 - 6*t2) + w**2*(3*t1**2 + 12*t1*t2 + 3*t2**2)) + s1**4*s2**6*(-2*t0**2*(48*t1*w + 32*t2*w - 16*t4) + 8*t0*(t1*w**2*(t1 + t2) + 4*t4**2 - t4*w*(9*t1 + 5*t2)) - 2*t3**2*(64*t0 + 30*t1*w - t2*w + 33*t4) + 8*t4*(t1*w - t4)*(t2*w - t4)) - 2*s1**3*s2**7*t3*(-448*t0**2 + t0*(112*t1*w - 336*t4) + 4*t3**2 + (56*t4 + 3*w*(t1 + t2))*(t1*w - t4)) + s1**2*s2**8*(2*t0**2*(32*t1*w + 8*t2*w - 24*t4) - 8*t0*(t1*w - t4)*(2*t1*w + t2*w - 5*t4) + 2*t3**2*(64*t0 - 33*t1*w + 33*t4) - 8*t4*(-t1*w + t4)**2) + s1*s2**9*t3*(-224*t0**2 + t0*(112*t1*w - 112*t4) + 3*(-t1*w + t4)**2) + 8*s2**10*t0*(-t1*w + t4)*(2*t0 - t1*w + t4)
    out['f6d'] = 384*s1**4*s2**4*(s1**2*(t2*w + t4) + 2*s1*s2*t3 + s2**2*(-t1*w + t4))**3
    return out
