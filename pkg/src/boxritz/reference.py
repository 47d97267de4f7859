"""Published ten-digit Ritz values for the box model, used as regression fixtures.

Keys are basis sizes N; values are the tabulated non-null eigenvalues in
ascending order, as printed (decimal strings).
"""

STANDARD = {
    4: ("4.934874810", "19.75077640", "51.06512518", "100.2492235"),
    5: ("4.934802217", "19.75077640", "44.58681182", "100.2492235"),
    6: ("4.934802217", "19.73923669", "44.58681182", "79.99595777"),
    7: ("4.934802200", "19.73923669", "44.41473408", "79.99595777"),
    8: ("4.934802200", "19.73920882", "44.41473408", "78.97848206"),
    9: ("4.934802200", "19.73920882", "44.41322468", "78.97848206"),
    10: ("4.934802200", "19.73920880", "44.41322468", "78.95700917"),
    11: ("4.934802200", "19.73920880", "44.41321981", "78.95700917"),
    12: ("4.934802200", "19.73920880", "44.41321981", "78.95683586"),
    13: ("4.934802200", "19.73920880", "44.41321980", "78.95683586"),
    14: ("4.934802200", "19.73920880", "44.41321980", "78.95683521"),
    15: ("4.934802200", "19.73920880", "44.41321980", "78.95683521"),
    16: ("4.934802200", "19.73920880", "44.41321980", "78.95683520"),
    17: ("4.934802200", "19.73920880", "44.41321980", "78.95683520"),
    18: ("4.934802200", "19.73920880", "44.41321980", "78.95683520"),
    19: ("4.934802200", "19.73920880", "44.41321980", "78.95683520"),
    20: ("4.934802200", "19.73920880", "44.41321980", "78.95683520"),
}

PROJECTED_D1 = {
    1: ("4.927671482",),
    2: ("4.927671482",),
    3: ("4.934799721",),
    4: ("4.934799721",),
    5: ("4.934802200",),
    6: ("4.934802200",),
}

PROJECTED_D2 = {
    2: ("4.927671482", "19.40270646"),
    3: ("4.934799721", "19.40270646"),
    4: ("4.934799721", "19.73799899"),
    5: ("4.934802200", "19.73799899"),
    6: ("4.934802200", "19.73920734"),
    7: ("4.934802200", "19.73920734"),
    8: ("4.934802200", "19.73920880"),
    9: ("4.934802200", "19.73920880"),
    10: ("4.934802200", "19.73920880"),
}

PROJECTED_D3 = {
    3: ("4.934799541", "19.40270646", "41.72191568"),
    4: ("4.934799541", "19.73799899", "41.72191568"),
    5: ("4.934802200", "19.73799899", "44.37877225"),
    6: ("4.934802200", "19.73920734", "44.37877225"),
    7: ("4.934802200", "19.73920734", "44.41306667"),
    8: ("4.934802200", "19.73920880", "44.41306667"),
    9: ("4.934802200", "19.73920880", "44.41321950"),
    10: ("4.934802200", "19.73920880", "44.41321950"),
    11: ("4.934802200", "19.73920880", "44.41321980"),
    12: ("4.934802200", "19.73920880", "44.41321980"),
    13: ("4.934802200", "19.73920880", "44.41321980"),
}

PROJECTED = {1: PROJECTED_D1, 2: PROJECTED_D2, 3: PROJECTED_D3}

# weights (1, 2, 3)
WEIGHTED_123 = {
    4: ("0.9999994479", "1.999877421", "2.818209291"),
    5: ("0.9999999999", "1.999877421", "2.997673155"),
    6: ("0.9999999999", "1.999999852", "2.997673155"),
    7: ("0.9999999999", "1.999999852", "2.999989656"),
    8: ("0.9999999999", "1.999999999", "2.999989656"),
    9: ("0.9999999999", "1.999999999", "2.999999979"),
    10: ("0.9999999999", "1.999999999", "2.999999979"),
    11: ("0.9999999999", "1.999999999", "2.999999999"),
    12: ("1.0000000000", "1.999999999", "2.999999999"),
    13: ("1.0000000000", "1.999999999", "2.999999999"),
    14: ("1.0000000000", "1.999999999", "2.999999999"),
}
