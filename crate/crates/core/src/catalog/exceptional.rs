//! Literal matrices of the exceptional families over variables x, y, z and a
//! placeholder h for the extra z-coefficient, which is substituted per type.

use super::Entry;

pub(super) const E6: &[Entry] = &[
    // M_1
    Entry {
        a: &["  z x^2", " -x z+h"],
        b: &[" z+h -x^2", "   x    z"],
    },
    // M_2
    Entry {
        a: &[
            "   z    0  x^2    0",
            "   0    z  x*y -x^2",
            "  -x    0  z+h    0",
            "  -y    x    0  z+h",
        ],
        b: &[
            " z+h    0 -x^2    0",
            "   0  z+h -x*y  x^2",
            "   x    0    z    0",
            "   y   -x    0    z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "   z    0    0  x^2  y^2  x*y",
            "   0    z    0    0  x^2    0",
            "   0    0    z    0 -x*y -x^2",
            "  -x    0   -y  z+h    0    0",
            "   0   -x    0    0  z+h    0",
            "   0    y    x    0    0  z+h",
        ],
        b: &[
            " z+h    0    0 -x^2 -y^2 -x*y",
            "   0  z+h    0    0 -x^2    0",
            "   0    0  z+h    0  x*y  x^2",
            "   x    0    y    z    0    0",
            "   0    x    0    0    z    0",
            "   0   -y   -x    0    0    z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "   z    0    x    0",
            "   0    z   -y    x",
            "-x^2    0  z+h    0",
            "-x*y -x^2    0  z+h",
        ],
        b: &[
            "z+h   0  -x   0",
            "  0 z+h   y  -x",
            "x^2   0   z   0",
            "x*y x^2   0   z",
        ],
    },
    // M_5
    Entry {
        a: &["   z    x", "-x^2  z+h"],
        b: &["z+h  -x", "x^2   z"],
    },
    // M_6
    Entry {
        a: &[
            "  z   0 x^2   y",
            "  0   z   0  -x",
            " -x  -y z+h   0",
            "  0 x^2   0 z+h",
        ],
        b: &[
            " z+h    0 -x^2   -y",
            "   0  z+h    0    x",
            "   x    y    z    0",
            "   0 -x^2    0    z",
        ],
    },
];

pub(super) const E7_0: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "     z      0    x^2  x*y^2",
            "     0      z      y     -x",
            "    -x -x*y^2      z      0",
            "    -y    x^2      0      z",
        ],
        b: &[
            "     z      0   -x^2 -x*y^2",
            "     0      z     -y      x",
            "     x  x*y^2      z      0",
            "     y   -x^2      0      z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "     z      0      0    x^2  x*y^2 -x^2*y",
            "     0      z      0   -x*y    x^2  x*y^2",
            "     0      0      z    y^2   -x*y    x^2",
            "    -x      0   -x*y      z      0      0",
            "    -y     -x      0      0      z      0",
            "     0     -y     -x      0      0      z",
        ],
        b: &[
            "     z      0      0   -x^2 -x*y^2  x^2*y",
            "     0      z      0    x*y   -x^2 -x*y^2",
            "     0      0      z   -y^2    x*y   -x^2",
            "     x      0    x*y      z      0      0",
            "     y      x      0      0      z      0",
            "     0      y      x      0      0      z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "     z      0      0      0      0      0    x^2  x*y^2",
            "     0      z      0      0      0      0    x*y   -x^2",
            "     0      0      z      0      x    y^2      0   -x*y",
            "     0      0      0      z      y     -x      x      0",
            "     0    x*y   -x^2 -x*y^2      z      0      0      0",
            "    -x      0   -x*y    x^2      0      z      0      0",
            "    -x   -y^2      0      0      0      0      z      0",
            "    -y      x      0      0      0      0      0      z",
        ],
        b: &[
            "     z      0      0      0      0      0   -x^2 -x*y^2",
            "     0      z      0      0      0      0   -x*y    x^2",
            "     0      0      z      0     -x   -y^2      0    x*y",
            "     0      0      0      z     -y      x     -x      0",
            "     0   -x*y    x^2  x*y^2      z      0      0      0",
            "     x      0    x*y   -x^2      0      z      0      0",
            "     x    y^2      0      0      0      0      z      0",
            "     y     -x      0      0      0      0      0      z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "    z     0     0  -x*y   x^2 x*y^2",
            "    0     z     0   y^2  -x*y   x^2",
            "    0     0     z     x   y^2  -x*y",
            "    0  -x*y  -x^2     z     0     0",
            "   -x     0  -x*y     0     z     0",
            "   -y    -x     0     0     0     z",
        ],
        b: &[
            "     z      0      0    x*y   -x^2 -x*y^2",
            "     0      z      0   -y^2    x*y   -x^2",
            "     0      0      z     -x   -y^2    x*y",
            "     0    x*y    x^2      z      0      0",
            "     x      0    x*y      0      z      0",
            "     y      x      0      0      0      z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "   z    0  x*y  x^2",
            "   0    z    x -y^2",
            "-y^2 -x^2    z    0",
            "  -x  x*y    0    z",
        ],
        b: &[
            "   z    0 -x*y -x^2",
            "   0    z   -x  y^2",
            " y^2  x^2    z    0",
            "   x -x*y    0    z",
        ],
    },
    // M_6
    Entry {
        a: &["       z -x^2-y^3", "       x        z"],
        b: &["      z x^2+y^3", "     -x       z"],
    },
    // M_7
    Entry {
        a: &[
            "    z     0   x^2 x*y^2",
            "    0     z   x*y  -x^2",
            "   -x  -y^2     z     0",
            "   -y     x     0     z",
        ],
        b: &[
            "     z      0   -x^2 -x*y^2",
            "     0      z   -x*y    x^2",
            "     x    y^2      z      0",
            "     y     -x      0      z",
        ],
    },
];

pub(super) const E7_1_CHAR3: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "     z      0    x^2  x*y^2",
            "     0      z    x+y     -x",
            "    -x -x*y^2      z      0",
            "  -x-y    x^2      0      z",
        ],
        b: &[
            "     z      0   -x^2 -x*y^2",
            "     0      z   -x-y      x",
            "     x  x*y^2      z      0",
            "   x+y   -x^2      0      z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "            z             0             0           x^2   x^2*y+x*y^2             0",
            "            0             z             0          -x*y           x^2             0",
            "            0             0             z          -y^2           x*y x^2+x*y^2+y^3",
            "           -x       x*y+y^2             0             z             0             0",
            "           -y            -x             0             0             z             0",
            "            0             y            -x             0             0             z",
        ],
        b: &[
            "             z              0              0           -x^2   -x^2*y-x*y^2              0",
            "             0              z              0            x*y           -x^2              0",
            "             0              0              z            y^2           -x*y -x^2-x*y^2-y^3",
            "             x       -x*y-y^2              0              z              0              0",
            "             y              x              0              0              z              0",
            "             0             -y              x              0              0              z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "          z           0           0           0           0           0         x^2 x^2*y+x*y^2",
            "          0           z           0           0           0           0        -x*y         x^2",
            "          0           0           z           0        -y^2       x+y^2          -x        -x*y",
            "          0           0           0           z          -x          -y           y           0",
            "          0         y^2         x*y   x^2+x*y^2           z           0           0           0",
            "         -x         y^2        -x^2       x*y^2           0           z           0           0",
            "         -x     x*y+y^2           0           0           0           0           z           0",
            "         -y          -x           0           0           0           0           0           z",
        ],
        b: &[
            "           z            0            0            0            0            0         -x^2 -x^2*y-x*y^2",
            "           0            z            0            0            0            0          x*y         -x^2",
            "           0            0            z            0          y^2       -x-y^2            x          x*y",
            "           0            0            0            z            x            y           -y            0",
            "           0         -y^2         -x*y   -x^2-x*y^2            z            0            0            0",
            "           x         -y^2          x^2       -x*y^2            0            z            0            0",
            "           x     -x*y-y^2            0            0            0            0            z            0",
            "           y            x            0            0            0            0            0            z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "            z             0             0             0 x^2+x*y^2+y^3             0",
            "            0             z             0           y^2      -x*y-y^3     x^2+x*y^2",
            "            0             0             z             x           y^2          -x*y",
            "            0          -x*y    -x*y^2-x^2             z             0             0",
            "           -x             0             0             0             z             0",
            "           -y            -x           y^2             0             0             z",
        ],
        b: &[
            "             z              0              0              0 -x^2-x*y^2-y^3              0",
            "             0              z              0           -y^2        x*y+y^3     -x^2-x*y^2",
            "             0              0              z             -x           -y^2            x*y",
            "             0            x*y      x*y^2+x^2              z              0              0",
            "             x              0              0              0              z              0",
            "             y              x           -y^2              0              0              z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "      z       0 x^2+x*y     x^2",
            "      0       z       x    -y^2",
            "   -y^2    -x^2       z       0",
            "     -x x^2+x*y       0       z",
        ],
        b: &[
            "       z        0 -x^2-x*y     -x^2",
            "       0        z       -x      y^2",
            "     y^2      x^2        z        0",
            "       x -x^2-x*y        0        z",
        ],
    },
    // M_6
    Entry {
        a: &[
            "             z -x^2-x*y^2-y^3",
            "             x              z",
        ],
        b: &[
            "            z x^2+x*y^2+y^3",
            "           -x             z",
        ],
    },
    // M_7
    Entry {
        a: &[
            "      z       0     x^2   x*y^2",
            "      0       z x^2+x*y    -x^2",
            "     -x    -y^2       z       0",
            "   -x-y       x       0       z",
        ],
        b: &[
            "       z        0     -x^2   -x*y^2",
            "       0        z -x^2-x*y      x^2",
            "       x      y^2        z        0",
            "     x+y       -x        0        z",
        ],
    },
];

pub(super) const E7_CHAR2: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "    z     0   x^2 x*y^2",
            "    0     z     y     x",
            "    x x*y^2   z+h     0",
            "    y   x^2     0   z+h",
        ],
        b: &[
            "  z+h     0   x^2 x*y^2",
            "    0   z+h     y     x",
            "    x x*y^2     z     0",
            "    y   x^2     0     z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "    z     0     0   x^2 x*y^2 x^2*y",
            "    0     z     0   x*y   x^2 x*y^2",
            "    0     0     z   y^2   x*y   x^2",
            "    x     0   x*y   z+h     0     0",
            "    y     x     0     0   z+h     0",
            "    0     y     x     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0   x^2 x*y^2 x^2*y",
            "    0   z+h     0   x*y   x^2 x*y^2",
            "    0     0   z+h   y^2   x*y   x^2",
            "    x     0   x*y     z     0     0",
            "    y     x     0     0     z     0",
            "    0     y     x     0     0     z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "    z     0     0     0     0     0   x^2 x*y^2",
            "    0     z     0     0     0     0   x*y   x^2",
            "    0     0     z     0     x   y^2     0   x*y",
            "    0     0     0     z     y     x     x     0",
            "    0   x*y   x^2 x*y^2   z+h     0     0     0",
            "    x     0   x*y   x^2     0   z+h     0     0",
            "    x   y^2     0     0     0     0   z+h     0",
            "    y     x     0     0     0     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0     0     0     0   x^2 x*y^2",
            "    0   z+h     0     0     0     0   x*y   x^2",
            "    0     0   z+h     0     x   y^2     0   x*y",
            "    0     0     0   z+h     y     x     x     0",
            "    0   x*y   x^2 x*y^2     z     0     0     0",
            "    x     0   x*y   x^2     0     z     0     0",
            "    x   y^2     0     0     0     0     z     0",
            "    y     x     0     0     0     0     0     z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "    z     0     0   x*y   x^2 x*y^2",
            "    0     z     0   y^2   x*y   x^2",
            "    0     0     z     x   y^2   x*y",
            "    0   x*y   x^2   z+h     0     0",
            "    x     0   x*y     0   z+h     0",
            "    y     x     0     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0   x*y   x^2 x*y^2",
            "    0   z+h     0   y^2   x*y   x^2",
            "    0     0   z+h     x   y^2   x*y",
            "    0   x*y   x^2     z     0     0",
            "    x     0   x*y     0     z     0",
            "    y     x     0     0     0     z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "  z   0 x*y x^2",
            "  0   z   x y^2",
            "y^2 x^2 z+h   0",
            "  x x*y   0 z+h",
        ],
        b: &[
            "z+h   0 x*y x^2",
            "  0 z+h   x y^2",
            "y^2 x^2   z   0",
            "  x x*y   0   z",
        ],
    },
    // M_6
    Entry {
        a: &["      z x^2+y^3", "      x     z+h"],
        b: &["    z+h x^2+y^3", "      x       z"],
    },
    // M_7
    Entry {
        a: &[
            "    z     0   x^2 x*y^2",
            "    0     z   x*y   x^2",
            "    x   y^2   z+h     0",
            "    y     x     0   z+h",
        ],
        b: &[
            "  z+h     0   x^2 x*y^2",
            "    0   z+h   x*y   x^2",
            "    x   y^2     z     0",
            "    y     x     0     z",
        ],
    },
];

pub(super) const E8_0: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "   z    0 -y^3 -x^2",
            "   0    z    x -y^2",
            " y^2 -x^2    z    0",
            "   x  y^3    0    z",
        ],
        b: &[
            "   z    0  y^3  x^2",
            "   0    z   -x  y^2",
            "-y^2  x^2    z    0",
            "  -x -y^3    0    z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "     z      0      0      0      0   -y^3   -x^2      0",
            "     0      z      0      0   -y^2      0    x*y   -x^2",
            "     0      0      z      0     -x   -y^2      0    y^3",
            "     0      0      0      z      0     -x    y^2      0",
            "     0    y^3    x^2 -x*y^2      z      0      0      0",
            "   y^2      0      0    x^2      0      z      0      0",
            "     x      0      0   -y^3      0      0      z      0",
            "     y      x   -y^2      0      0      0      0      z",
        ],
        b: &[
            "    z     0     0     0     0   y^3   x^2     0",
            "    0     z     0     0   y^2     0  -x*y   x^2",
            "    0     0     z     0     x   y^2     0  -y^3",
            "    0     0     0     z     0     x  -y^2     0",
            "    0  -y^3  -x^2 x*y^2     z     0     0     0",
            " -y^2     0     0  -x^2     0     z     0     0",
            "   -x     0     0   y^3     0     0     z     0",
            "   -y    -x   y^2     0     0     0     0     z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "     z      0      0      0      0      0      0      0      0   -x^2  x*y^2   -y^4",
            "     0      z      0      0      0      0      0      0      0   -y^3   -x^2  x*y^2",
            "     0      0      z      0      0      0      0      0      0    x*y   -y^3   -x^2",
            "     0      0      0      z      0      0     -x   -y^2      0      0      0    y^3",
            "     0      0      0      0      z      0      0     -x   -y^2    y^2      0      0",
            "     0      0      0      0      0      z     -y      0     -x      0    y^2      0",
            "     0      0    y^3    x^2 -x*y^2    y^4      z      0      0      0      0      0",
            "   y^2      0      0    y^3    x^2 -x*y^2      0      z      0      0      0      0",
            "     0    y^2      0   -x*y    y^3    x^2      0      0      z      0      0      0",
            "     x    y^2      0      0      0      0      0      0      0      z      0      0",
            "     0      x    y^2      0      0      0      0      0      0      0      z      0",
            "     y      0      x      0      0      0      0      0      0      0      0      z",
        ],
        b: &[
            "     z      0      0      0      0      0      0      0      0    x^2 -x*y^2    y^4",
            "     0      z      0      0      0      0      0      0      0    y^3    x^2 -x*y^2",
            "     0      0      z      0      0      0      0      0      0   -x*y    y^3    x^2",
            "     0      0      0      z      0      0      x    y^2      0      0      0   -y^3",
            "     0      0      0      0      z      0      0      x    y^2   -y^2      0      0",
            "     0      0      0      0      0      z      y      0      x      0   -y^2      0",
            "     0      0   -y^3   -x^2  x*y^2   -y^4      z      0      0      0      0      0",
            "  -y^2      0      0   -y^3   -x^2  x*y^2      0      z      0      0      0      0",
            "     0   -y^2      0    x*y   -y^3   -x^2      0      0      z      0      0      0",
            "    -x   -y^2      0      0      0      0      0      0      0      z      0      0",
            "     0     -x   -y^2      0      0      0      0      0      0      0      z      0",
            "    -y      0     -x      0      0      0      0      0      0      0      0      z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "    z     0     0     0     0  -y^3   x^2     0     0     0",
            "    0     z     0     0     0     0   y^3  -x^2 x*y^2  -y^4",
            "    0     0     z     0     0     0  -x*y  -y^3  -x^2 x*y^2",
            "    0     0     0     z     0   y^2     0   x*y  -y^3  -x^2",
            "    0     0     0     0     z    -x  -y^2     0     0     0",
            "  y^2     0     0     0   x^2     z     0     0     0     0",
            "   -x     0     0     0   y^3     0     z     0     0     0",
            "    0     x   y^2     0     0     0     0     z     0     0",
            "    y     0     x   y^2     0     0     0     0     z     0",
            "    0     y     0     x   y^2     0     0     0     0     z",
        ],
        b: &[
            "     z      0      0      0      0    y^3   -x^2      0      0      0",
            "     0      z      0      0      0      0   -y^3    x^2 -x*y^2    y^4",
            "     0      0      z      0      0      0    x*y    y^3    x^2 -x*y^2",
            "     0      0      0      z      0   -y^2      0   -x*y    y^3    x^2",
            "     0      0      0      0      z      x    y^2      0      0      0",
            "  -y^2      0      0      0   -x^2      z      0      0      0      0",
            "     x      0      0      0   -y^3      0      z      0      0      0",
            "     0     -x   -y^2      0      0      0      0      z      0      0",
            "    -y      0     -x   -y^2      0      0      0      0      z      0",
            "     0     -y      0     -x   -y^2      0      0      0      0      z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "   z    0    0    0  x*y -y^2 -x^2    0",
            "   0    z    0    0 -y^3    0    0   -x",
            "   0    0    z    0  x^2    0    0 -y^2",
            "   0    0    0    z    0    x -y^3   -y",
            "   0  y^2   -x    0    z    0    0    0",
            " y^3  x*y    0 -x^2    0    z    0    0",
            "   x    0   -y  y^2    0    0    z    0",
            "   0  x^2  y^3    0    0    0    0    z",
        ],
        b: &[
            "   z    0    0    0 -x*y  y^2  x^2    0",
            "   0    z    0    0  y^3    0    0    x",
            "   0    0    z    0 -x^2    0    0  y^2",
            "   0    0    0    z    0   -x  y^3    y",
            "   0 -y^2    x    0    z    0    0    0",
            "-y^3 -x*y    0  x^2    0    z    0    0",
            "  -x    0    y -y^2    0    0    z    0",
            "   0 -x^2 -y^3    0    0    0    0    z",
        ],
    },
    // M_6
    Entry {
        a: &[
            "    z     0     0  -x^2  -y^4 x*y^3",
            "    0     z     0   x*y  -x^2  -y^4",
            "    0     0     z  -y^2   x*y  -x^2",
            "    x     0   y^3     z     0     0",
            "    y     x     0     0     z     0",
            "    0     y     x     0     0     z",
        ],
        b: &[
            "     z      0      0    x^2    y^4 -x*y^3",
            "     0      z      0   -x*y    x^2    y^4",
            "     0      0      z    y^2   -x*y    x^2",
            "    -x      0   -y^3      z      0      0",
            "    -y     -x      0      0      z      0",
            "     0     -y     -x      0      0      z",
        ],
    },
    // M_7
    Entry {
        a: &[
            "   z    0 -x^2 -y^4",
            "   0    z   -y    x",
            "   x  y^4    z    0",
            "   y -x^2    0    z",
        ],
        b: &[
            "   z    0  x^2  y^4",
            "   0    z    y   -x",
            "  -x -y^4    z    0",
            "  -y  x^2    0    z",
        ],
    },
    // M_8
    Entry {
        a: &[
            "    z     0     0  -x^2 x*y^2  -y^4",
            "    0     z     0  -y^3  -x^2 x*y^2",
            "    0     0     z   x*y  -y^3  -x^2",
            "    x   y^2     0     z     0     0",
            "    0     x   y^2     0     z     0",
            "    y     0     x     0     0     z",
        ],
        b: &[
            "     z      0      0    x^2 -x*y^2    y^4",
            "     0      z      0    y^3    x^2 -x*y^2",
            "     0      0      z   -x*y    y^3    x^2",
            "    -x   -y^2      0      z      0      0",
            "     0     -x   -y^2      0      z      0",
            "    -y      0     -x      0      0      z",
        ],
    },
];

pub(super) const E8_1_CHAR5: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "       z        0     -y^3 -x^2-y^4",
            "       0        z        x     -y^2",
            "     y^2 -x^2-y^4        z        0",
            "       x      y^3        0        z",
        ],
        b: &[
            "      z       0     y^3 x^2+y^4",
            "      0       z      -x     y^2",
            "   -y^2 x^2+y^4       z       0",
            "     -x    -y^3       0       z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "       z        0        0        0        0     -y^3 -x^2-y^4        0",
            "       0        z        0        0     -y^2      y^3      x*y -x^2-y^4",
            "       0        0        z        0       -x     -y^2        0      y^3",
            "       0        0        0        z        0       -x      y^2        0",
            "       0      y^3  x^2+y^4   -x*y^2        z        0        0        0",
            "     y^2        0        0  x^2+y^4        0        z        0        0",
            "       x        0        0     -y^3        0        0        z        0",
            "       y        x     -y^2      y^3        0        0        0        z",
        ],
        b: &[
            "       z        0        0        0        0      y^3  x^2+y^4        0",
            "       0        z        0        0      y^2     -y^3     -x*y  x^2+y^4",
            "       0        0        z        0        x      y^2        0     -y^3",
            "       0        0        0        z        0        x     -y^2        0",
            "       0     -y^3 -x^2-y^4    x*y^2        z        0        0        0",
            "    -y^2        0        0 -x^2-y^4        0        z        0        0",
            "      -x        0        0      y^3        0        0        z        0",
            "      -y       -x      y^2     -y^3        0        0        0        z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "       z        0        0        0        0        0        0      y^3        0 -x^2-y^4        0        0",
            "       0        z        0        0        0        0     -y^2      y^3        0     -x*y        0  x^2+y^4",
            "       0        0        z        0        0        0        y     -y^2 -x*y-y^2        0       -x     -y^3",
            "       0        0        0        z        0        0        0       -x        0     -y^2        0        0",
            "       0        0        0        0        z        0       -x     -y^2        0        0        0     -y^3",
            "       0        0        0        0        0        z        0     -x*y     -x^2        0      y^3   -x*y^2",
            "       0      y^3        0   -x*y^2  x^2+y^4        0        z        0        0        0        0        0",
            "    -y^2        0        0  x^2+y^4        0        0        0        z        0        0        0        0",
            "       0      y^2      y^3     -x*y        0        x        0        0        z        0        0        0",
            "       x        0        0      y^3        0        0        0        0        0        z        0        0",
            "       0        0      x^2        0      x*y -x*y-y^2        0        0        0        0        z        0",
            "       y       -x        0     -y^3      y^2        0        0        0        0        0        0        z",
        ],
        b: &[
            "       z        0        0        0        0        0        0     -y^3        0  x^2+y^4        0        0",
            "       0        z        0        0        0        0      y^2     -y^3        0      x*y        0 -x^2-y^4",
            "       0        0        z        0        0        0       -y      y^2  x*y+y^2        0        x      y^3",
            "       0        0        0        z        0        0        0        x        0      y^2        0        0",
            "       0        0        0        0        z        0        x      y^2        0        0        0      y^3",
            "       0        0        0        0        0        z        0      x*y      x^2        0     -y^3    x*y^2",
            "       0     -y^3        0    x*y^2 -x^2-y^4        0        z        0        0        0        0        0",
            "     y^2        0        0 -x^2-y^4        0        0        0        z        0        0        0        0",
            "       0     -y^2     -y^3      x*y        0       -x        0        0        z        0        0        0",
            "      -x        0        0     -y^3        0        0        0        0        0        z        0        0",
            "       0        0     -x^2        0     -x*y  x*y+y^2        0        0        0        0        z        0",
            "      -y        x        0      y^3     -y^2        0        0        0        0        0        0        z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "      z       0       0       0       0    -y^3     x^2       0  -x*y^3       0",
            "      0       z       0       0       0       0     y^3 x^2+y^4   x*y^2    -y^4",
            "      0       0       z       0       0       0    -x*y     y^3    -x^2   x*y^2",
            "      0       0       0       z       0     y^2       0    -x*y    -y^3    -x^2",
            "      0       0       0       0       z      -x    -y^2    -y^3       0  -x*y^2",
            "    y^2       0       0  -x*y^2     x^2       z       0       0       0       0",
            "     -x       0     y^3       0     y^3       0       z       0       0       0",
            "      0      -x    -y^2       0       0       0       0       z       0       0",
            "      y       0       x     y^2       0       0       0       0       z       0",
            "      0       y       0       x     y^2       0       0       0       0       z",
        ],
        b: &[
            "       z        0        0        0        0      y^3     -x^2        0    x*y^3        0",
            "       0        z        0        0        0        0     -y^3 -x^2-y^4   -x*y^2      y^4",
            "       0        0        z        0        0        0      x*y     -y^3      x^2   -x*y^2",
            "       0        0        0        z        0     -y^2        0      x*y      y^3      x^2",
            "       0        0        0        0        z        x      y^2      y^3        0    x*y^2",
            "    -y^2        0        0    x*y^2     -x^2        z        0        0        0        0",
            "       x        0     -y^3        0     -y^3        0        z        0        0        0",
            "       0        x      y^2        0        0        0        0        z        0        0",
            "      -y        0       -x     -y^2        0        0        0        0        z        0",
            "       0       -y        0       -x     -y^2        0        0        0        0        z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "       z        0        0        0      x*y -x*y-y^2     -x^2        0",
            "       0        z        0        0     -y^3        0        0       -x",
            "       0        0        z        0      x^2        0        0 -x*y-y^2",
            "       0        0        0        z        0        x     -y^3       -y",
            "       0  x*y+y^2       -x        0        z        0        0        0",
            "     y^3      x*y        0     -x^2        0        z        0        0",
            "       x        0       -y  x*y+y^2        0        0        z        0",
            "       0      x^2      y^3        0        0        0        0        z",
        ],
        b: &[
            "       z        0        0        0     -x*y  x*y+y^2      x^2        0",
            "       0        z        0        0      y^3        0        0        x",
            "       0        0        z        0     -x^2        0        0  x*y+y^2",
            "       0        0        0        z        0       -x      y^3        y",
            "       0 -x*y-y^2        x        0        z        0        0        0",
            "    -y^3     -x*y        0      x^2        0        z        0        0",
            "      -x        0        y -x*y-y^2        0        0        z        0",
            "       0     -x^2     -y^3        0        0        0        0        z",
        ],
    },
    // M_6
    Entry {
        a: &[
            "         z          0          0       -x^2 -x*y^3-y^4      x*y^3",
            "         0          z          0        x*y       -x^2       -y^4",
            "         0          0          z       -y^2        x*y   -x^2-y^4",
            "         x       -y^3        y^3          z          0          0",
            "         y          x          0          0          z          0",
            "         0          y          x          0          0          z",
        ],
        b: &[
            "        z         0         0       x^2 x*y^3+y^4    -x*y^3",
            "        0         z         0      -x*y       x^2       y^4",
            "        0         0         z       y^2      -x*y   x^2+y^4",
            "       -x       y^3      -y^3         z         0         0",
            "       -y        -x         0         0         z         0",
            "        0        -y        -x         0         0         z",
        ],
    },
    // M_7
    Entry {
        a: &[
            "         z          0       -x^2 -x*y^3-y^4",
            "         0          z         -y          x",
            "         x  x*y^3+y^4          z          0",
            "         y       -x^2          0          z",
        ],
        b: &[
            "         z          0        x^2  x*y^3+y^4",
            "         0          z          y         -x",
            "        -x -x*y^3-y^4          z          0",
            "        -y        x^2          0          z",
        ],
    },
    // M_8
    Entry {
        a: &[
            "         z          0          0       -x^2      x*y^2 -x*y^3-y^4",
            "         0          z          0       -y^3   -x^2-y^4      x*y^2",
            "         0          0          z        x*y       -y^3       -x^2",
            "         x        y^2       -y^3          z          0          0",
            "         0          x        y^2          0          z          0",
            "         y          0          x          0          0          z",
        ],
        b: &[
            "        z         0         0       x^2    -x*y^2 x*y^3+y^4",
            "        0         z         0       y^3   x^2+y^4    -x*y^2",
            "        0         0         z      -x*y       y^3       x^2",
            "       -x      -y^2       y^3         z         0         0",
            "        0        -x      -y^2         0         z         0",
            "       -y         0        -x         0         0         z",
        ],
    },
];

pub(super) const E8_1_CHAR3: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "         z          0 -x^2-x*y^3        y^2",
            "         0          z       -y^3         -x",
            "         x        y^2          z          0",
            "      -y^3  x^2+x*y^3          0          z",
        ],
        b: &[
            "         z          0  x^2+x*y^3       -y^2",
            "         0          z        y^3          x",
            "        -x       -y^2          z          0",
            "       y^3 -x^2-x*y^3          0          z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "         z          0          0          0          0       -y^3 -x^2-x*y^3       -y^4",
            "         0          z          0          0        y^2      x*y^2        x*y       -x^2",
            "         0          0          z          0          0          x       -y^2        x*y",
            "         0          0          0          z         -x        y^2          0          0",
            "         0       -y^3     -x*y^2  x^2+x*y^3          z          0          0          0",
            "         0       -x*y       -x^2       -y^3          0          z          0          0",
            "         x          0        y^3          0          0          0          z          0",
            "         y          x     -x*y^2        y^2          0          0          0          z",
        ],
        b: &[
            "         z          0          0          0          0        y^3  x^2+x*y^3        y^4",
            "         0          z          0          0       -y^2     -x*y^2       -x*y        x^2",
            "         0          0          z          0          0         -x        y^2       -x*y",
            "         0          0          0          z          x       -y^2          0          0",
            "         0        y^3      x*y^2 -x^2-x*y^3          z          0          0          0",
            "         0        x*y        x^2        y^3          0          z          0          0",
            "        -x          0       -y^3          0          0          0          z          0",
            "        -y         -x      x*y^2       -y^2          0          0          0          z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "         z          0          0          0          0          0       -x*y          0          0       -x^2          0       -y^4",
            "         0          z          0          0          0          0          0       -x*y        y^3          0 -x^2-x*y^3          0",
            "         0          0          z          0          0          0          0          0       -x*y       -x*y       -y^3        x^2",
            "         0          0          0          z          0          0         -x       -y^2          0      x*y^2          0          0",
            "         0          0          0          0          z          0          0         -x          0       -y^2          0        x*y",
            "         0          0          0          0          0          z          y          0         -x          0       -y^2     -x*y^2",
            "     x*y^2          0        y^3        x^2     -x*y^2       -y^4          z          0          0          0          0          0",
            "         0          0       -x*y        y^3  x^2+x*y^3      x*y^2          0          z          0          0          0          0",
            "         0       -y^2      x*y^2        x*y          0        x^2          0          0          z          0          0          0",
            "         x          0          0       -x*y        y^3          0          0          0          0          z          0          0",
            "         0          x        y^2          0       -x*y          0          0          0          0          0          z          0",
            "         y          0         -x          0          0        x*y          0          0          0          0          0          z",
        ],
        b: &[
            "         z          0          0          0          0          0        x*y          0          0        x^2          0        y^4",
            "         0          z          0          0          0          0          0        x*y       -y^3          0  x^2+x*y^3          0",
            "         0          0          z          0          0          0          0          0        x*y        x*y        y^3       -x^2",
            "         0          0          0          z          0          0          x        y^2          0     -x*y^2          0          0",
            "         0          0          0          0          z          0          0          x          0        y^2          0       -x*y",
            "         0          0          0          0          0          z         -y          0          x          0        y^2      x*y^2",
            "    -x*y^2          0       -y^3       -x^2      x*y^2        y^4          z          0          0          0          0          0",
            "         0          0        x*y       -y^3 -x^2-x*y^3     -x*y^2          0          z          0          0          0          0",
            "         0        y^2     -x*y^2       -x*y          0       -x^2          0          0          z          0          0          0",
            "        -x          0          0        x*y       -y^3          0          0          0          0          z          0          0",
            "         0         -x       -y^2          0        x*y          0          0          0          0          0          z          0",
            "        -y          0          x          0          0       -x*y          0          0          0          0          0          z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "           z            0            0            0            0         -x*y          x^2            0 -x^2*y^2-y^4            0",
            "           0            z            0            0            0            0       -x*y^2   -x^2-x*y^3       -x^2*y         -y^4",
            "           0            0            z            0            0          y^2         -x*y            0         -x^2            0",
            "           0            0            0            z            0       -x*y^2         -y^3         -x*y       -x*y^2          x^2",
            "           0            0            0            0            z           -x            0          y^2            0         -x*y",
            "           0            0         -y^3          x*y          x^2            z            0            0            0            0",
            "          -x            0        x*y^2          y^2          x*y            0            z            0            0            0",
            "           0            x         -x*y            0         -y^3            0            0            z            0            0",
            "           y            0            x            0            0            0            0            0            z            0",
            "           0            y            0           -x        x*y^2            0            0            0            0            z",
        ],
        b: &[
            "          z           0           0           0           0         x*y        -x^2           0 x^2*y^2+y^4           0",
            "          0           z           0           0           0           0       x*y^2   x^2+x*y^3       x^2*y         y^4",
            "          0           0           z           0           0        -y^2         x*y           0         x^2           0",
            "          0           0           0           z           0       x*y^2         y^3         x*y       x*y^2        -x^2",
            "          0           0           0           0           z           x           0        -y^2           0         x*y",
            "          0           0         y^3        -x*y        -x^2           z           0           0           0           0",
            "          x           0      -x*y^2        -y^2        -x*y           0           z           0           0           0",
            "          0          -x         x*y           0         y^3           0           0           z           0           0",
            "         -y           0          -x           0           0           0           0           0           z           0",
            "          0          -y           0           x      -x*y^2           0           0           0           0           z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "           z            0            0            0          x*y          y^3          x^2            0",
            "           0            z            0            0          y^2       -x*y^2          x*y           -x",
            "           0            0            z            0          x^2        x*y^2 -x^2*y^2-y^4            0",
            "           0            0            0            z            0            x            0           -y",
            "      -x*y^2         -y^3           -x        x*y^2            z            0            0            0",
            "        -y^2          x*y            0         -x^2            0            z            0            0",
            "          -x            0            y            0            0            0            z            0",
            "        -x*y          x^2            0  x^2*y^2+y^4            0            0            0            z",
        ],
        b: &[
            "           z            0            0            0         -x*y         -y^3         -x^2            0",
            "           0            z            0            0         -y^2        x*y^2         -x*y            x",
            "           0            0            z            0         -x^2       -x*y^2  x^2*y^2+y^4            0",
            "           0            0            0            z            0           -x            0            y",
            "       x*y^2          y^3            x       -x*y^2            z            0            0            0",
            "         y^2         -x*y            0          x^2            0            z            0            0",
            "           x            0           -y            0            0            0            z            0",
            "         x*y         -x^2            0 -x^2*y^2-y^4            0            0            0            z",
        ],
    },
    // M_6
    Entry {
        a: &[
            "           z            0            0          x*y          x^2         -y^4",
            "           0            z            0          x^2 -x^2*y^2-y^4       -x*y^3",
            "           0            0            z          y^2          x*y    x^2+x*y^3",
            "      -x*y^2           -x         -y^3            z            0            0",
            "          -x            y            0            0            z            0",
            "           y            0           -x            0            0            z",
        ],
        b: &[
            "          z           0           0        -x*y        -x^2         y^4",
            "          0           z           0        -x^2 x^2*y^2+y^4       x*y^3",
            "          0           0           z        -y^2        -x*y  -x^2-x*y^3",
            "      x*y^2           x         y^3           z           0           0",
            "          x          -y           0           0           z           0",
            "         -y           0           x           0           0           z",
        ],
    },
    // M_7
    Entry {
        a: &[
            "           z            0         -x^2            y",
            "           0            z -x^2*y^2-y^4           -x",
            "           x            y            z            0",
            "-x^2*y^2-y^4          x^2            0            z",
        ],
        b: &[
            "          z           0         x^2          -y",
            "          0           z x^2*y^2+y^4           x",
            "         -x          -y           z           0",
            "x^2*y^2+y^4        -x^2           0           z",
        ],
    },
    // M_8
    Entry {
        a: &[
            "         z          0          0       -x^2      x*y^2       -y^4",
            "         0          z          0 -x^2*y-y^3       -x^2      x*y^2",
            "         0          0          z        x*y       -y^3 -x^2-x*y^3",
            "         x        y^2          0          z          0          0",
            "      -x*y          x        y^2          0          z          0",
            "         y          0          x          0          0          z",
        ],
        b: &[
            "        z         0         0       x^2    -x*y^2       y^4",
            "        0         z         0 x^2*y+y^3       x^2    -x*y^2",
            "        0         0         z      -x*y       y^3 x^2+x*y^3",
            "       -x      -y^2         0         z         0         0",
            "      x*y        -x      -y^2         0         z         0",
            "       -y         0        -x         0         0         z",
        ],
    },
];

pub(super) const E8_2_CHAR3: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "         z          0 -x^2-x*y^2        y^2",
            "         0          z       -y^3         -x",
            "         x        y^2          z          0",
            "      -y^3  x^2+x*y^2          0          z",
        ],
        b: &[
            "         z          0  x^2+x*y^2       -y^2",
            "         0          z        y^3          x",
            "        -x       -y^2          z          0",
            "       y^3 -x^2-x*y^2          0          z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "         z          0          0          0          0       -y^3 -x^2-x*y^2       -y^4",
            "         0          z          0          0        y^2        x*y        x*y       -x^2",
            "         0          0          z          0         -x        y^2          0          0",
            "         0          0          0          z          0          x       -y^2        x*y",
            "         0       -y^3  x^2+x*y^2     -x*y^2          z          0          0          0",
            "         0       -x*y       -y^3       -x^2          0          z          0          0",
            "         x          0          0        y^3          0          0          z          0",
            "         y          x        y^2       -x*y          0          0          0          z",
        ],
        b: &[
            "         z          0          0          0          0        y^3  x^2+x*y^2        y^4",
            "         0          z          0          0       -y^2       -x*y       -x*y        x^2",
            "         0          0          z          0          x       -y^2          0          0",
            "         0          0          0          z          0         -x        y^2       -x*y",
            "         0        y^3 -x^2-x*y^2      x*y^2          z          0          0          0",
            "         0        x*y        y^3        x^2          0          z          0          0",
            "        -x          0          0       -y^3          0          0          z          0",
            "        -y         -x       -y^2        x*y          0          0          0          z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "         z          0          0          0          0          0          0    x^2+y^3          0       -x^2          0          0",
            "         0          z          0          0          0          0          0          0        y^3    x^2+y^3 -x^2-x*y^2     -x*y^2",
            "         0          0          z          0          0          0       -y^2       -x*y          0       -x*y          0        x^2",
            "         0          0          0          z          0          0         -x       -y^2          0       -x*y          0   -x^2-y^3",
            "         0          0          0          0          z          0          0         -x          0       -y^2          0          0",
            "         0          0          0          0          0          z          y        y^2         -x       -x*y       -y^2          0",
            "       x*y          0    x^2+y^3        x^2     -x*y^2          0          z          0          0          0          0          0",
            "      -y^2          0          0          0        x^2          0          0          z          0          0          0          0",
            "      -x*y       -y^2        x*y        x*y -x^2*y-y^3  x^2+x*y^2          0          0          z          0          0          0",
            "         x          0          0          0    x^2+y^3          0          0          0          0          z          0          0",
            "     x-y^2          x        y^2          0  x^2-x*y^2        y^3          0          0          0          0          z          0",
            "         y          0         -x        y^2       -x*y          0          0          0          0          0          0          z",
        ],
        b: &[
            "         z          0          0          0          0          0          0   -x^2-y^3          0        x^2          0          0",
            "         0          z          0          0          0          0          0          0       -y^3   -x^2-y^3  x^2+x*y^2      x*y^2",
            "         0          0          z          0          0          0        y^2        x*y          0        x*y          0       -x^2",
            "         0          0          0          z          0          0          x        y^2          0        x*y          0    x^2+y^3",
            "         0          0          0          0          z          0          0          x          0        y^2          0          0",
            "         0          0          0          0          0          z         -y       -y^2          x        x*y        y^2          0",
            "      -x*y          0   -x^2-y^3       -x^2      x*y^2          0          z          0          0          0          0          0",
            "       y^2          0          0          0       -x^2          0          0          z          0          0          0          0",
            "       x*y        y^2       -x*y       -x*y  x^2*y+y^3 -x^2-x*y^2          0          0          z          0          0          0",
            "        -x          0          0          0   -x^2-y^3          0          0          0          0          z          0          0",
            "    -x+y^2         -x       -y^2          0 -x^2+x*y^2       -y^3          0          0          0          0          z          0",
            "        -y          0          x       -y^2        x*y          0          0          0          0          0          0          z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "         z          0          0          0          0          0 -x^2-x*y^2       -y^3          0      x*y^2",
            "         0          z          0          0          0        y^3          0       -x^2     -x^2*y     -x^2*y",
            "         0          0          z          0          0       -y^2        x*y          0        x^2       -y^3",
            "         0          0          0          z          0          0        y^3       -x*y          0        x^2",
            "         0          0          0          0          z      x+y^2          0        y^2        y^3        y^3",
            "         0       -y^2          0          0       -x^2          z          0          0          0          0",
            "         x          0          0       -y^2          0          0          z          0          0          0",
            "       y^2          x        x*y        x*y          0          0          0          z          0          0",
            "        -y          0     -x-y^2          0       -y^2          0          0          0          z          0",
            "         0          y        y^2         -x          0          0          0          0          0          z",
        ],
        b: &[
            "        z         0         0         0         0         0 x^2+x*y^2       y^3         0    -x*y^2",
            "        0         z         0         0         0      -y^3         0       x^2     x^2*y     x^2*y",
            "        0         0         z         0         0       y^2      -x*y         0      -x^2       y^3",
            "        0         0         0         z         0         0      -y^3       x*y         0      -x^2",
            "        0         0         0         0         z    -x-y^2         0      -y^2      -y^3      -y^3",
            "        0       y^2         0         0       x^2         z         0         0         0         0",
            "       -x         0         0       y^2         0         0         z         0         0         0",
            "     -y^2        -x      -x*y      -x*y         0         0         0         z         0         0",
            "        y         0     x+y^2         0       y^2         0         0         0         z         0",
            "        0        -y      -y^2         x         0         0         0         0         0         z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "         z          0          0          0          0          x          0         -y",
            "         0          z          0          0        y^2        x*y        x*y          x",
            "         0          0          z          0        x^2          0 -x^2*y-y^4       -y^3",
            "         0          0          0          z        x*y       -y^3        x^2          0",
            "         0       -y^3         -x       -x*y          z          0          0          0",
            "      -x^2       -x*y          0        y^2          0          z          0          0",
            "      -y^3          0          y         -x          0          0          z          0",
            " x^2*y+y^4       -x^2          0        x*y          0          0          0          z",
        ],
        b: &[
            "         z          0          0          0          0         -x          0          y",
            "         0          z          0          0       -y^2       -x*y       -x*y         -x",
            "         0          0          z          0       -x^2          0  x^2*y+y^4        y^3",
            "         0          0          0          z       -x*y        y^3       -x^2          0",
            "         0        y^3          x        x*y          z          0          0          0",
            "       x^2        x*y          0       -y^2          0          z          0          0",
            "       y^3          0         -y          x          0          0          z          0",
            "-x^2*y-y^4        x^2          0       -x*y          0          0          0          z",
        ],
    },
    // M_6
    Entry {
        a: &[
            "         z          0          0        x^2 -x^2*y-y^4     -x*y^3",
            "         0          z          0        x*y        x^2       -y^4",
            "         0          0          z        y^2        x*y  x^2+x*y^2",
            "        -x       -x*y       -y^3          z          0          0",
            "         y         -x          0          0          z          0",
            "         0          y         -x          0          0          z",
        ],
        b: &[
            "         z          0          0       -x^2  x^2*y+y^4      x*y^3",
            "         0          z          0       -x*y       -x^2        y^4",
            "         0          0          z       -y^2       -x*y -x^2-x*y^2",
            "         x        x*y        y^3          z          0          0",
            "        -y          x          0          0          z          0",
            "         0         -y          x          0          0          z",
        ],
    },
    // M_7
    Entry {
        a: &[
            "         z          0       -x^2          y",
            "         0          z -x^2*y-y^4         -x",
            "         x          y          z          0",
            "-x^2*y-y^4        x^2          0          z",
        ],
        b: &[
            "        z         0       x^2        -y",
            "        0         z x^2*y+y^4         x",
            "       -x        -y         z         0",
            "x^2*y+y^4      -x^2         0         z",
        ],
    },
    // M_8
    Entry {
        a: &[
            "         z          0          0       -x^2      x*y^2       -y^4",
            "         0          z          0   -x^2-y^3       -x^2      x*y^2",
            "         0          0          z        x*y       -y^3 -x^2-x*y^2",
            "         x        y^2          0          z          0          0",
            "        -x          x        y^2          0          z          0",
            "         y          0          x          0          0          z",
        ],
        b: &[
            "        z         0         0       x^2    -x*y^2       y^4",
            "        0         z         0   x^2+y^3       x^2    -x*y^2",
            "        0         0         z      -x*y       y^3 x^2+x*y^2",
            "       -x      -y^2         0         z         0         0",
            "        x        -x      -y^2         0         z         0",
            "       -y         0        -x         0         0         z",
        ],
    },
];

pub(super) const E8_CHAR2: &[Entry] = &[
    // M_1
    Entry {
        a: &[
            "  z   0 y^3 x^2",
            "  0   z   x y^2",
            "y^2 x^2 z+h   0",
            "  x y^3   0 z+h",
        ],
        b: &[
            "z+h   0 y^3 x^2",
            "  0 z+h   x y^2",
            "y^2 x^2   z   0",
            "  x y^3   0   z",
        ],
    },
    // M_2
    Entry {
        a: &[
            "    z     0     0     0     0   y^3   x^2     0",
            "    0     z     0     0   y^2     0   x*y   x^2",
            "    0     0     z     0     x   y^2     0   y^3",
            "    0     0     0     z     0     x   y^2     0",
            "    0   y^3   x^2 x*y^2   z+h     0     0     0",
            "  y^2     0     0   x^2     0   z+h     0     0",
            "    x     0     0   y^3     0     0   z+h     0",
            "    y     x   y^2     0     0     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0     0     0   y^3   x^2     0",
            "    0   z+h     0     0   y^2     0   x*y   x^2",
            "    0     0   z+h     0     x   y^2     0   y^3",
            "    0     0     0   z+h     0     x   y^2     0",
            "    0   y^3   x^2 x*y^2     z     0     0     0",
            "  y^2     0     0   x^2     0     z     0     0",
            "    x     0     0   y^3     0     0     z     0",
            "    y     x   y^2     0     0     0     0     z",
        ],
    },
    // M_3
    Entry {
        a: &[
            "    z     0     0     0     0     0     0     0     0   x^2 x*y^2   y^4",
            "    0     z     0     0     0     0     0     0     0   y^3   x^2 x*y^2",
            "    0     0     z     0     0     0     0     0     0   x*y   y^3   x^2",
            "    0     0     0     z     0     0     x   y^2     0     0     0   y^3",
            "    0     0     0     0     z     0     0     x   y^2   y^2     0     0",
            "    0     0     0     0     0     z     y     0     x     0   y^2     0",
            "    0     0   y^3   x^2 x*y^2   y^4   z+h     0     0     0     0     0",
            "  y^2     0     0   y^3   x^2 x*y^2     0   z+h     0     0     0     0",
            "    0   y^2     0   x*y   y^3   x^2     0     0   z+h     0     0     0",
            "    x   y^2     0     0     0     0     0     0     0   z+h     0     0",
            "    0     x   y^2     0     0     0     0     0     0     0   z+h     0",
            "    y     0     x     0     0     0     0     0     0     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0     0     0     0     0     0     0   x^2 x*y^2   y^4",
            "    0   z+h     0     0     0     0     0     0     0   y^3   x^2 x*y^2",
            "    0     0   z+h     0     0     0     0     0     0   x*y   y^3   x^2",
            "    0     0     0   z+h     0     0     x   y^2     0     0     0   y^3",
            "    0     0     0     0   z+h     0     0     x   y^2   y^2     0     0",
            "    0     0     0     0     0   z+h     y     0     x     0   y^2     0",
            "    0     0   y^3   x^2 x*y^2   y^4     z     0     0     0     0     0",
            "  y^2     0     0   y^3   x^2 x*y^2     0     z     0     0     0     0",
            "    0   y^2     0   x*y   y^3   x^2     0     0     z     0     0     0",
            "    x   y^2     0     0     0     0     0     0     0     z     0     0",
            "    0     x   y^2     0     0     0     0     0     0     0     z     0",
            "    y     0     x     0     0     0     0     0     0     0     0     z",
        ],
    },
    // M_4
    Entry {
        a: &[
            "    z     0     0     0     0   y^3   x^2     0     0     0",
            "    0     z     0     0     0     0   y^3   x^2 x*y^2   y^4",
            "    0     0     z     0     0     0   x*y   y^3   x^2 x*y^2",
            "    0     0     0     z     0   y^2     0   x*y   y^3   x^2",
            "    0     0     0     0     z     x   y^2     0     0     0",
            "  y^2     0     0     0   x^2   z+h     0     0     0     0",
            "    x     0     0     0   y^3     0   z+h     0     0     0",
            "    0     x   y^2     0     0     0     0   z+h     0     0",
            "    y     0     x   y^2     0     0     0     0   z+h     0",
            "    0     y     0     x   y^2     0     0     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0     0     0   y^3   x^2     0     0     0",
            "    0   z+h     0     0     0     0   y^3   x^2 x*y^2   y^4",
            "    0     0   z+h     0     0     0   x*y   y^3   x^2 x*y^2",
            "    0     0     0   z+h     0   y^2     0   x*y   y^3   x^2",
            "    0     0     0     0   z+h     x   y^2     0     0     0",
            "  y^2     0     0     0   x^2     z     0     0     0     0",
            "    x     0     0     0   y^3     0     z     0     0     0",
            "    0     x   y^2     0     0     0     0     z     0     0",
            "    y     0     x   y^2     0     0     0     0     z     0",
            "    0     y     0     x   y^2     0     0     0     0     z",
        ],
    },
    // M_5
    Entry {
        a: &[
            "  z   0   0   0 x*y y^2 x^2   0",
            "  0   z   0   0 y^3   0   0   x",
            "  0   0   z   0 x^2   0   0 y^2",
            "  0   0   0   z   0   x y^3   y",
            "  0 y^2   x   0 z+h   0   0   0",
            "y^3 x*y   0 x^2   0 z+h   0   0",
            "  x   0   y y^2   0   0 z+h   0",
            "  0 x^2 y^3   0   0   0   0 z+h",
        ],
        b: &[
            "z+h   0   0   0 x*y y^2 x^2   0",
            "  0 z+h   0   0 y^3   0   0   x",
            "  0   0 z+h   0 x^2   0   0 y^2",
            "  0   0   0 z+h   0   x y^3   y",
            "  0 y^2   x   0   z   0   0   0",
            "y^3 x*y   0 x^2   0   z   0   0",
            "  x   0   y y^2   0   0   z   0",
            "  0 x^2 y^3   0   0   0   0   z",
        ],
    },
    // M_6
    Entry {
        a: &[
            "    z     0     0   x^2   y^4 x*y^3",
            "    0     z     0   x*y   x^2   y^4",
            "    0     0     z   y^2   x*y   x^2",
            "    x     0   y^3   z+h     0     0",
            "    y     x     0     0   z+h     0",
            "    0     y     x     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0   x^2   y^4 x*y^3",
            "    0   z+h     0   x*y   x^2   y^4",
            "    0     0   z+h   y^2   x*y   x^2",
            "    x     0   y^3     z     0     0",
            "    y     x     0     0     z     0",
            "    0     y     x     0     0     z",
        ],
    },
    // M_7
    Entry {
        a: &[
            "  z   0 x^2 y^4",
            "  0   z   y   x",
            "  x y^4 z+h   0",
            "  y x^2   0 z+h",
        ],
        b: &[
            "z+h   0 x^2 y^4",
            "  0 z+h   y   x",
            "  x y^4   z   0",
            "  y x^2   0   z",
        ],
    },
    // M_8
    Entry {
        a: &[
            "    z     0     0   x^2 x*y^2   y^4",
            "    0     z     0   y^3   x^2 x*y^2",
            "    0     0     z   x*y   y^3   x^2",
            "    x   y^2     0   z+h     0     0",
            "    0     x   y^2     0   z+h     0",
            "    y     0     x     0     0   z+h",
        ],
        b: &[
            "  z+h     0     0   x^2 x*y^2   y^4",
            "    0   z+h     0   y^3   x^2 x*y^2",
            "    0     0   z+h   x*y   y^3   x^2",
            "    x   y^2     0     z     0     0",
            "    0     x   y^2     0     z     0",
            "    y     0     x     0     0     z",
        ],
    },
];
