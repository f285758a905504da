"""Generated by tools/generate_kernels.py -- do not edit by hand."""
from numpy import exp, sqrt

def immersion_terms(Rv, Rp, Rpp, hv, hp, hpp, cv, cp, cpp, e0, es, et, ess, est, ett):
    x0 = et**2
    x1 = cv - 1
    x2 = x1**2
    x3 = e0*x1
    x4 = exp(-2*x3)
    x5 = hv**2*x4
    x6 = x2*x5
    x7 = Rv**2
    x8 = x7 + 1
    x9 = x8**(-2.0)
    x10 = cv*e0
    x11 = exp(-2*x10)
    x12 = x11*x9
    x13 = x12*x7
    x14 = 4*x12
    x15 = x14*x7
    x16 = x15 - 1
    x17 = x16**2
    x18 = x17**(-1.0)
    x19 = 16*x18
    x20 = x13*x19
    x21 = cv**2
    x22 = x20*x21
    x23 = x0*x22 + x0*x6 + x20
    x24 = cp*e0
    x25 = es*x1 + x24
    x26 = 2*cp
    x27 = cpp*e0 + es*x26
    x28 = 2*hp*x25 - hpp - hv*x25**2 + hv*(ess*x1 + x27)
    x29 = cv*es + x24
    x30 = Rv*x29
    x31 = 2*Rp
    x32 = x8**(-1.0)
    x33 = x32*x7
    x34 = -Rp + x30 + x31*x33
    x35 = -x34
    x36 = exp(-x3)
    x37 = x35*x36
    x38 = x28*x37
    x39 = x29*x31
    x40 = x29**2
    x41 = Rv*(cv*ess + x27)
    x42 = Rp**2
    x43 = Rv*x32
    x44 = 6*x42*x43
    x45 = 2*x33
    x46 = Rpp*x45
    x47 = Rv**3
    x48 = x16**(-1.0)
    x49 = Rv*x48
    x50 = x35**2
    x51 = 8*x9
    x52 = x11*x51
    x53 = x50*x52
    x54 = 4*Rp*x29*x32*x7 + Rpp + Rv*x40 - x39 - x41 + 8*x42*x47*x9 - x44 - x46 - x49*x53
    x55 = -x1
    x56 = -es*x55 + x24
    x57 = -hv*x56
    x58 = hp + x57
    x59 = e0*x55
    x60 = exp(x59)
    x61 = x58*x60
    x62 = x38 + x54*x61
    x63 = hv*x25
    x64 = hp - x63
    x65 = x34**2
    x66 = x12*x19
    x67 = x4*x64**2 + x65*x66
    x68 = -ett
    x69 = x0*x1 + x68
    x70 = hv*x1
    x71 = x69*x70
    x72 = hv*x56
    x73 = hp - x72
    x74 = cv*x0
    x75 = cv*(x68 + x74)
    x76 = x52*x7
    x77 = x48*x76
    x78 = x0*x21
    x79 = -x75 + x77*x78 - x77 + 1
    x80 = hv*x35
    x81 = Rv*cv*x73 - x1*x80
    x82 = x8*exp(x10)/Rv
    x83 = exp(-x10)
    x84 = x43*x83
    x85 = 8*x84
    x86 = x48*x85
    x87 = -x82 + x86
    x88 = x81*x87
    x89 = 2*x74*x84
    x90 = Rv*x73*x79 - x34*x71 - x88*x89
    x91 = hp*x1
    x92 = cp*et
    x93 = -est*x55 + x92
    x94 = x1*x72
    x95 = et*x91 - et*x94 + hv*x93
    x96 = et*x77
    x97 = cv*x35
    x98 = Rv*(cv*est + x92)
    x99 = Rp*cv
    x100 = et*x99
    x101 = cv*x30
    x102 = et*x101
    x103 = x100*x45
    x104 = -x100 + x102 + x103 - x98
    x105 = x32*x83
    x106 = x105*x34*x88
    x107 = -et*x106 + x34*x95 + x73*(-x104 - x96*x97)
    x108 = x107*x36
    x109 = x4*x70
    x110 = Rv*cv
    x111 = x110*x35
    x112 = x109*x73 + x111*x66
    x113 = et*x112
    x114 = 2*x113
    x115 = 2*x105
    x116 = hv*x55
    x117 = exp(2*x59)
    x118 = -x16
    x119 = 16*x12
    x120 = x111*x119/x118**2 - x116*x117*x58
    x121 = x120**2
    x122 = x4*x73**2
    x123 = x122 + x50*x66
    x124 = (1/4)*x17
    x125 = x7**(-1.0)
    x126 = x4*x81**2
    x127 = -x37*x70
    x128 = x110*x61
    x129 = x16**(-3.0)
    x130 = Rv**4
    x131 = x8**(-4.0)
    x132 = exp(-4*x10)
    x133 = x131*x132
    x134 = x130*x133
    x135 = 128*x129*x134
    x136 = cv**3*x0
    x137 = -cv*x135 + cv*x20 + x0*x1**3*x5 - x135*x136 + x136*x20
    x138 = cp*hv
    x139 = x138 + x91
    x140 = x139 - x94
    x141 = x4*x64
    x142 = cv*x133
    x143 = Rv*cp
    x144 = x45*x99
    x145 = x101 - x143 + x144 - x99
    x146 = -x145
    x147 = x34*x66
    x148 = 128*x129*x142*x65*x7 - x140*x141 + x146*x147
    x149 = hv*x2
    x150 = Rv*x21
    x151 = x109*x140 + x110*x146*x66 + 256*x129*x133*x21*x34*x47 + x141*x149 - x147*x150
    x152 = 2*et
    x153 = x146*x36
    x154 = hp*x55
    x155 = x55*x57
    x156 = -x138 + x154 + x155
    x157 = x156*x60
    x158 = 4*Rp*x33
    x159 = 64*x18
    x160 = x159*x47
    x161 = Rpp + Rv*x40 + x158*x29 - x39 - x41 + x42*x47*x51 - x44 - x46
    x162 = x149*x37
    x163 = -x87
    x164 = x110*x58 + x55*x80
    x165 = x163*x164
    x166 = x115*x60
    x167 = x165*x166
    x168 = x0*x150
    x169 = -Rv*x79
    x170 = x164*(-x160*exp(-3*x10)/x8**3 + x82 + x86)
    x171 = x13*x48
    x172 = x75 - 1
    x173 = x150*x58
    x174 = x55**2*x80
    x175 = x110*x156 + x116*x145 - x173 + x174
    x176 = x163*x175
    x177 = x60*x89
    x178 = -x95
    x179 = x118**(-1.0)
    x180 = x179*x76
    x181 = x180*x97
    x182 = et*x181 + x100 - x102 - x103 + x98
    x183 = et*x60
    x184 = x105*x183
    x185 = x184*x35
    x186 = 2*x120
    x187 = x22 + x6
    x188 = et*x187
    x189 = 4*x105
    x190 = -x127 - x128
    x191 = x115*x190
    x192 = x35*x52
    x193 = x164**2
    x194 = (1/2)*x17
    Hnum = x115*(x108*x114 - x23*x62 + x36*x67*x90)
    detg = -x0*x121 + x123*x23
    norm2 = x0*x124*x125*x126 + x122*x124 + x14*x65
    phi_n = x115*x35
    pair_n = x115*(x127 + 4*x128*x18)
    gss = x67
    gst = -x113
    gtt = x23
    Hn_e0 = x115*(-x108*x151*x152 - x114*(cv*x170*x185 + cv*x61*(Rv*cp*et + 64*cv*et*x130*x131*x132*x18*x35 - 16*et*x171*x97 - x104 - x146*x96) - x1*x37*(hv*x92 + x95) - x146*x165*x184 + x153*x178 - x157*x182 + x176*x185) + 2*x137*x62 + 2*x148*x36*x90 - x23*(-x1*x38 - x153*x28 + x157*x54 + x37*(cpp*hv + hp*x26 - x26*x63) + x61*(-Rp*x26 - Rv*cpp + cp*x158 - cv*x161 + x110*x48*x53 + x119*x146*x35*x49 - x142*x160*x50 + x26*x30)) - x67*(x128*(24*x0*x11*x21*x48*x7*x9 + 64*x130*x131*x132*x18 - x134*x159*x78 - 24*x171 - x172) + x153*x71 + x157*x169 + x162*x69 - x166*x168*x170 + x167*x168 - x176*x177))
    Hn_es = -x115*(Rv*hv*x123*(cv*x1*x36*x69 + x55*x60*(x172 + x180*x78 - x180)) + x183*x186*(-et*x105*x110*x164*(x179*x85 + x82) + et*x173*(x180 + 1) - et*x174 + x110*(et*x154 + et*x155 - hv*x93) - x116*x182) + x186*(x165*x177 - x169*x61 + x37*x71) + 2*x188*(-x165*x185 + x178*x37 + x182*x61) + x23*(-x110*x28*x36 + x116*x60*(Rv*x179*x53 + x161) - 2*x37*(hv*x1*x25 - x139) + 2*x61*(x101 - x143 + x144 - x181 - x99)))
    Hn_et = x189*(et*x112*x36*(-x106 + x140*x34 + x73*(-x145 - x77*x97)) - et*x67*(Rv*x21*x58*x60*(1 - x77) - x110*x167 - x162) + x107*x112*x36 - x188*x62)
    Hn_ess = -x191*x23
    Hn_est = -x113*x189*x190
    Hn_ett = -x191*x67
    dg_e0 = 2*x0*x112*x151 - 2*x137*x67 + 2*x148*x23
    dg_es = x186*(x0*x187 - x23)
    dg_et = x152*(-x121 + x123*x187)
    n2_e0 = (1/2)*cv*x0*x117*x125*x17*x193 - cv*x117*x15*x16*x58**2 + (1/2)*x0*x117*x125*x164*x17*x175 - x117*x14*x16*x193*x74 + (1/2)*x117*x156*x17*x58 - x146*x192
    n2_es = -x110*x192 - x194*x36*x61*x70
    n2_et = et*x125*x126*x194
    return Hnum, detg, norm2, phi_n, pair_n, gss, gst, gtt, Hn_e0, Hn_es, Hn_et, Hn_ess, Hn_est, Hn_ett, dg_e0, dg_es, dg_et, n2_e0, n2_es, n2_et
