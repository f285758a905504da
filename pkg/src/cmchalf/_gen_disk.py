"""Generated by tools/generate_kernels.py -- do not edit by hand."""
from numpy import exp, sqrt

def psi_terms(r, m, n1, n2, n11, n12, n22):
    x0 = n2**6
    x1 = r**6
    x2 = 64*x1
    x3 = r**8
    x4 = 384*x3
    x5 = r**10
    x6 = 64*x5
    x7 = 448*m
    x8 = 128*x3
    x9 = r**7
    x10 = 384*n1
    x11 = x10*x9
    x12 = r**11
    x13 = x10*x12
    x14 = 512*n22
    x15 = n22*x3
    x16 = n1**6
    x17 = r**16
    x18 = r**5
    x19 = n1*x18
    x20 = 128*x19
    x21 = n1*x9
    x22 = 256*m
    x23 = r**9
    x24 = n1*x23
    x25 = n1*x12
    x26 = r**13
    x27 = 128*x26
    x28 = m*n1
    x29 = m*x1
    x30 = 128*n11
    x31 = n11*x3
    x32 = 512*m
    x33 = m*x5
    x34 = r**12
    x35 = m*x34
    x36 = r**14
    x37 = m*x36
    x38 = 128*n22
    x39 = r**4
    x40 = m*x39
    x41 = 256*n22
    x42 = n1*x26
    x43 = 256*n12
    x44 = n2*x43
    x45 = n12*n2
    x46 = 512*x45
    x47 = m**2
    x48 = 576*x47
    x49 = m**3
    x50 = n1**2
    x51 = 240*x50
    x52 = x5*x50
    x53 = n1**3
    x54 = 32*x53
    x55 = 192*x53
    x56 = x55*x9
    x57 = 480*x53
    x58 = r**15
    x59 = x55*x58
    x60 = r**17
    x61 = n1**4
    x62 = 36*x61
    x63 = 24*x61
    x64 = x3*x63
    x65 = 420*x61
    x66 = x34*x61
    x67 = x17*x63
    x68 = r**18
    x69 = n1**5
    x70 = 24*x69
    x71 = 96*x69
    x72 = 120*x69
    x73 = 4*x16
    x74 = r**20
    x75 = n2**2
    x76 = x39*x75
    x77 = 320*x75
    x78 = x3*x75
    x79 = x34*x75
    x80 = r**2
    x81 = n2**4
    x82 = 36*x81
    x83 = 120*x81
    x84 = 156*x81
    x85 = x3*x81
    x86 = 8*x0
    x87 = 28*x0
    x88 = 56*x0
    x89 = n1*x39
    x90 = 64*x45
    x91 = n1*x1
    x92 = 128*x45
    x93 = n1*x3
    x94 = n1*x34
    x95 = n1*x36
    x96 = 160*x50
    x97 = x3*x50
    x98 = 1344*m
    x99 = x34*x50
    x100 = 384*m
    x101 = x26*x53
    x102 = 12*x61
    x103 = 12*x5
    x104 = x103*x61
    x105 = 48*m
    x106 = 160*m
    x107 = 384*x29
    x108 = x5*x75
    x109 = 12*x81
    x110 = m*x80
    x111 = x39*x81
    x112 = 72*m
    x113 = 180*x81
    x114 = r**3
    x115 = 64*x75
    x116 = x114*x115
    x117 = 128*x75
    x118 = 256*x75
    x119 = n1*x114
    x120 = 24*x81
    x121 = 96*x81
    x122 = n1*x58
    x123 = 32*x39
    x124 = n22*x50
    x125 = n22*x2
    x126 = 32*n22
    x127 = 128*x52
    x128 = 64*x36
    x129 = x17*x50
    x130 = 32*n11
    x131 = n11*x2
    x132 = x30*x5
    x133 = n11*x36
    x134 = x17*x75
    x135 = 192*x18
    x136 = x135*x28
    x137 = m*x75
    x138 = 192*x42
    x139 = 48*x47
    x140 = x1*x50
    x141 = 96*x47
    x142 = x36*x50
    x143 = x1*x75
    x144 = 192*x47
    x145 = 288*x78
    x146 = 72*x50
    x147 = x143*x50
    x148 = x52*x75
    x149 = 144*x75
    x150 = 3*x81
    x151 = x50*x80
    x152 = x39*x50
    x153 = 30*x81
    x154 = x109*x50
    x155 = x50*x68
    x156 = 48*x53
    x157 = x156*x18
    x158 = x23*x75
    x159 = 144*x53
    x160 = x156*x60
    x161 = 3*x61
    x162 = x161*x74
    x163 = 24*m
    x164 = x163*x50
    x165 = 48*x50
    x166 = x165*x75
    x167 = x50*x78
    x168 = 96*m
    x169 = 4*x80
    x170 = 4*x1
    x171 = (x169 + x170 + x3 + 6*x39 + 1)**(-1.0)
    x172 = x171/x1
    x173 = 32*x1
    x174 = 288*m
    x175 = 32*n1
    x176 = n11*x123
    x177 = x130*x34
    x178 = 192*x23
    x179 = x139*x39
    x180 = 96*x53
    x181 = x161*x39
    x182 = 6*x61
    x183 = 40*x75
    x184 = 96*x76
    x185 = 96*x78
    x186 = 18*x81
    x187 = 60*x81
    x188 = x152*x163
    x189 = x163*x99
    x190 = 24*x75
    x191 = x110*x190
    x192 = 48*x75
    x193 = 96*x75
    x194 = 6*x75
    x195 = 12*x50
    x196 = x171/x39
    x197 = 64*m
    x198 = 128*x18
    x199 = n1*x150
    x200 = n22*x175
    x201 = 64*n22
    x202 = 32*x45
    x203 = 288*x50
    x204 = 720*x50
    x205 = 72*x53
    x206 = 840*x53
    x207 = x5*x53
    x208 = x156*x36
    x209 = 60*x61
    x210 = 240*x61
    x211 = 300*x61
    x212 = 3*x69
    x213 = 12*x69
    x214 = 48*x81
    x215 = x174*x50
    x216 = 576*x50
    x217 = m*x12
    x218 = 24*x53
    x219 = x163*x53
    x220 = n1*x80
    x221 = 72*x75
    x222 = 144*n1
    x223 = 72*n1
    x224 = n1*x105
    x225 = 24*x29
    x226 = x146*x75
    x227 = 216*x50*x75
    x228 = x194*x53
    x229 = n2**5
    x230 = 3*x229
    x231 = 240*n2
    x232 = 320*n2
    x233 = n2*x3
    x234 = n2*x34
    x235 = 32*n12
    x236 = n1*n12
    x237 = 64*n2
    x238 = 256*n2
    x239 = n2*x17
    x240 = n2**3
    x241 = 72*x240
    x242 = 240*x240
    x243 = 312*x240
    x244 = x240*x3
    x245 = 24*x229
    x246 = 84*x229
    x247 = 168*x229
    x248 = m*n2
    x249 = 24*x240
    x250 = 144*x240
    x251 = 360*x240
    x252 = n2*x144
    x253 = 48*x240
    x254 = 72*n2
    x255 = 144*n2
    x256 = n2*x52
    x257 = n2*x165
    x258 = n2*x163
    x259 = 6*x240
    x260 = 16*m
    x261 = 4*m
    x262 = 2*x75
    x263 = x171/x80
    x264 = (1/4)*x263
    x265 = 2*n1
    p0 = (1/128)*x172*(m*x102*x68 - m*x104 + m*x20 + 768*m*x24 + 1280*m*x25 + m*x56 - m*x59 + m*x64 + m*x67 + m*x8 - 240*m*x85 + n1*x116 - n1*x17*x90 + n1*x44*x5 + 768*n11*x33 + 512*n11*x35 - n22*x127 + r**22*x16 - r**19*x70 + x0*x17 + 70*x0*x3 + x0 + x1*x14 + x1*x16 - x1*x48 + x1*x51 - x1*x62 + x1*x7 + x1*x77 - x1*x84 - x1*x88 - x100*x101 + x100*x108 + x100*x23*x53 + x101*x149 - x102*x134 + x102*x29 - x102*x37 - x102*x78 - x105*x66 - x106*x76 - x106*x79 + x107*x75 - x108*x144 + x109*x110 + x109*x140 - x109*x152 + x109*x37 + x109*x97 + x109*x99 - x11*x137 + x11*x47 + x11 - x111*x112 - x112*x34*x81 + x113*x29 + x113*x33 + x115*x133 - x117*x19 - x117*x24 + x118*x21 + x118*x42 + x119*x120 + x12*x46 + x12*x72 - x120*x122 - x121*x19 + x121*x42 + x123*x124 + x124*x128 + x125*x50 + x126*x129 - x126*x97 - x126*x99 + x13*x137 - x13*x47 - x13 + x130*x134 + x130*x76 - x130*x78 - x130*x79 + x131*x75 - x132*x75 - x134*x146 + x134*x164 + x136*x75 - x137*x138 + x139*x140 + x139*x142 + x139*x76 + x139*x79 + x14*x21 - x14*x25 + x14*x5 - x141*x52 + x142*x149 - x143*x144 + x145*x47 - x146*x76 + x146*x78 + x146*x79 + 144*x147 + x148*x168 - 288*x148 - x15*x22 + 1024*x15 + x150*x151 + x150*x155 - x153*x52 - x154*x17 + x154*x36 + x157*x75 - x158*x159 - 10*x16*x36 - x160*x75 + x161*x76 + x162*x75 - x163*x167 + x164*x76 - x164*x79 - x166*x29 - x166*x37 - x17*x73 - x18*x44 + x18*x54 + x19*x41 + x2*x49 + x2 - x21*x22 + x21*x83 - x23*x57 + x23*x71 - x25*x77 - x25*x83 + x26*x44 + x26*x57 + x27*x28 + x29*x30 - x29*x96 + x3*x73 + x30*x37 + x31*x32 + x32*x97 + x32*x99 - x34*x73 + x34*x83 + x34*x87 + x35*x38 + x36*x51 + x36*x65 - x36*x82 - x36*x86 - x37*x96 + x38*x40 + x39*x83 + x39*x87 - x4*x47 + x4 - x41*x42 - x46*x9 - x48*x5 + x49*x6 - x49*x8 + x5*x65 + x5*x7 + x5*x73 + x5*x77 - x5*x84 - x5*x88 + x52*x98 - 480*x52 - x54*x60 - x56 - x58*x72 + x59 + x6 - x60*x71 + 18*x61*x79 - x62*x68 + x64 + 720*x66 + x67 + x68*x73 - x7*x78 + x70*x9 + x73*x74 + 240*x76 + 928*x78 + 240*x79 - x80*x82 - x80*x86 + 144*x85 - x89*x90 + x90*x93 + x90*x94 - x91*x92 - x92*x95)
    pm = (1/32)*x196*(-m*x184 - m*x185 - x1*x141 + x1*x182 - x1*x187 + x1*x30 - x104 - x105*x97 + x108*x163 + 45*x111 + x114*x175 + x119*x192 + x12*x175 - x12*x180 - x125 + x126*x5 + x126*x80 + x127 + x132 + x136 + x139*x3 + 128*x140 + x142*x194 - 112*x143 - 6*x147 - 6*x148 + x149*x29 + x150*x34 + x150 + x151*x194 - 40*x152 - x156*x26 + x157 + x161*x17 - x161*x3 + 24*x167 + x173 - x174*x3 - x174*x39 + x176 + x177 - x178*x28 + x179 + x180*x9 + x181 + x182*x36 - x183*x5 - x183*x80 + x184 + x185 - x186*x5 - x186*x80 + x188 + x189 - x19*x193 - 64*x19 + x191 - x192*x25 + x193*x24 - x195*x76 - x195*x79 + 192*x21 + 320*x24 - 192*x29 + 112*x3 + 192*x31 + 112*x39 - 3*x66 + 45*x85 + 336*x97 - 40*x99)
    p1 = (1/64)*x196*(m*x114*x193 - m*x198 + m*x208 + m*x216*x9 + 640*m*x23 - n1*n22*x173 + n1*x103*x81 - n1*x145 + n1*x190*x37 + n1*x191 - n1*x225*x75 + 512*n1*x29 + r*x109 + 32*r*x75 + x1*x156 + x1*x213 + x100*x9 - x103*x69 - x106*x89 - x106*x94 + x108*x223 - 24*x108*x28 - x109*x220 - x109*x26 + x109*x89 + x109*x91 + x109*x94 - x109*x95 + x114*x165 + x114*x197 - x114*x214 + x114*x226 + x114*x38 - x115*x9 - x116 + x117*x12 + x12*x197 + x12*x204 + x12*x214 + x12*x227 - x12*x38 - x135*x137 + x135*x47 + x135 + x137*x178 + x139*x89 + x139*x94 - x141*x93 - x143*x218 + x143*x223 - x153*x93 + x156*x29 - 160*x158 - x165*x58 + x17*x199 - x17*x205 + x17*x213 + x17*x219 + x173*x45 - x178*x47 - x178 + x18*x187 - x18*x203 + x18*x209 + x18*x215 + x18*x41 - x180*x33 + x185*x28 - x187*x23 - x190*x36*x53 - x193*x217 + x198*x75 + x199 + x200*x36 - x200*x5 + x200*x80 + x201*x89 + x201*x94 - x202*x36 + x202*x5 - x202*x80 + x203*x26 - x204*x9 - x205*x39 + x206*x3 + x206*x34 + 36*x207*x75 + 1440*x207 + x208 - x209*x60 - x210*x58 + x210*x9 + x211*x23 - x211*x26 + x212*x39 + x212*x74 + x213*x3 - x213*x36 + x213*x68 - x215*x26 - x216*x217 - x218*x35 + x218*x40 - x219*x3 - x220*x221 - x221*x95 + x222*x76 + x222*x79 - x224*x76 - x224*x79 - x226*x58 - x227*x9 + x228*x68 + x228*x80 - x23*x41 + 512*x28*x5 - 30*x34*x69 - x34*x90 - x38*x93 - x39*x90 + x45*x8 + 240*x89 + x93*x98 - 480*x93 + 240*x94)
    p2 = (1/64)*x172*(-480*m*x244 - n1*x135*x240 - n12*x17*x175 - n12*x198 + n12*x27 + n2*x100*x5 + n2*x107 + n2*x131 - n2*x132 + n2*x136 + n2*x157 - n2*x159*x23 - n2*x160 + n2*x162 + n2*x176 - n2*x177 + n2*x179 + n2*x181 + n2*x188 - n2*x189 - n2*x20 - 128*n2*x24 - 160*n2*x40 + 18*n2*x66 + x1*x232 - x1*x243 - x1*x247 - x1*x252 + x101*x255 - x102*x233 - x102*x239 - x106*x234 - x11*x248 + x110*x249 + x119*x237 + x119*x253 + x12*x43 - x122*x253 - x128*x236 - x129*x249 + x129*x258 + x13*x248 - x130*x233 + x130*x239 + x133*x237 + x138*x240 - x138*x248 + x139*x234 + x140*x249 + x140*x255 + x142*x249 + x142*x255 - x146*x239 + x151*x259 - x152*x249 - x152*x254 + x155*x259 + x168*x256 + x17*x230 - x2*x236 + x21*x238 + x21*x242 + 210*x229*x3 + x230 + x231*x34 + x231*x39 - x232*x25 + x232*x5 + 288*x233*x47 - x233*x7 + 928*x233 - x235*x89 + x235*x93 + x235*x94 + 128*x236*x5 + x238*x42 - 60*x240*x52 - x241*x36 - x241*x80 - x242*x25 + x242*x34 + x242*x39 - x243*x5 + 288*x244 - x245*x36 - x245*x80 + x246*x34 + x246*x39 - x247*x5 + x249*x37 + x249*x97 + x249*x99 - x250*x35 - x250*x40 + x251*x29 + x251*x33 - x252*x5 + x254*x97 + x254*x99 - 288*x256 - x257*x29 - x257*x37 - x258*x97 - x43*x9)
    p11 = x264*(m*x169 - x170*x75 + x225 + x260*x3 + x260*x39 + x261*x5 + x262*x5 + x262*x80 + x75 - x76 - x78 + x79)
    p12 = -1/2*n2*x263*(-n1*x170 + n1 + 4*r + 8*x114 - 4*x23 + x265*x5 + x265*x80 - x89 - 8*x9 - x93 + x94)
    p22 = x264*(8*n1*r + 16*x1 + 16*x119 + x123 + 2*x151 - x152 - x170*x50 - 16*x21 - 8*x24 + x261*x3 + x261 - 8*x40 + x50 + 2*x52 + 16*x80 - x97 + x99)
    return p0, pm, p1, p2, p11, p12, p22
