"""Frozen reference data for regression anchoring: the first eleven printed
coefficients of the seven normalized series, the instanton numbers through
degree ten, and the j-expansion through q^9.

These are transcribed digits, used as exact oracles by the verification
suites; nothing here is computed.
"""

from .rational import rat

#: label -> the eleven coefficients q^0..q^10 of the normalized series.
NORMALIZED_TABLES = {
    "(1/24)t0": [
        rat(1, 120),
        1,
        175,
        117625,
        111784375,
        126958105626,
        160715581780591,
        218874699262438350,
        314179164066791400375,
        469234842365062637809375,
        722875994952367766020759550,
    ],
    "(-1/750)t1": [
        rat(1, 30),
        3,
        930,
        566375,
        526770000,
        592132503858,
        745012928951258,
        1010500474677945510,
        1446287695614437271000,
        2155340222852696651995625,
        3314709711759484241245738380,
    ],
    "(-1/50)t2": [
        rat(7, 10),
        107,
        50390,
        29007975,
        26014527500,
        28743493632402,
        35790559257796542,
        48205845153859479030,
        68647453506412345755300,
        101912303698877609329100625,
        156263153250677320910779548340,
    ],
    "(-1/5)t3": [
        rat(6, 5),
        71,
        188330,
        100324275,
        86097977000,
        93009679497426,
        114266677893238146,
        152527823430305901510,
        215812408812642816943200,
        318839967257572460805706125,
        487033977592346076373921829980,
    ],
    "-t4": [
        0,
        -1,
        170,
        41475,
        32183000,
        32678171250,
        38612049889554,
        50189141795178390,
        69660564113425804800,
        101431587084669781525125,
        153189681044166218779637500,
    ],
    "25t5": [
        rat(-1, 125),
        15,
        938,
        587805,
        525369650,
        577718296190,
        716515428667010,
        962043316960737646,
        1366589803139580122090,
        2024744003173189934886225,
        3099476777084481347731347688,
    ],
    "15625t6": [
        0,
        -15,
        26249,
        3512835,
        2527019900,
        2381349669050,
        2699403828169815,
        3414337117855753978,
        4647615139046603293280,
        6668975996587015549602975,
        9957519516309695103093241870,
    ],
}

#: (scale, variable index) recovering each normalized series from the solution.
NORMALIZATION_SCALES = {
    "(1/24)t0": (rat(1, 24), 0),
    "(-1/750)t1": (rat(-1, 750), 1),
    "(-1/50)t2": (rat(-1, 50), 2),
    "(-1/5)t3": (rat(-1, 5), 3),
    "-t4": (rat(-1), 4),
    "25t5": (rat(25), 5),
    "15625t6": (rat(15625), 6),
}

#: Degree-0 constant followed by the instanton numbers n_1..n_10.
INSTANTON_REFERENCE = [
    5,
    2875,
    609250,
    317206375,
    242467530000,
    229305888887625,
    248249742118022000,
    295091050570845659250,
    375632160937476603550000,
    503840510416985243645106250,
    704288164978454686113488249750,
]

#: 3125 j = pole/q + c0 + c1 q + ... through q^9, digits as printed.
J_POLE_REFERENCE = 1
J_REGULAR_REFERENCE = [
    770,
    421375,
    274007500,
    236982309375,
    251719793608904,
    304471121626588125,
    401431674714748714500,
    562487442070502650877500,
    824572505123979141773850000,
    1013472859153384775272872409691,
]

#: The q^9 coefficient recomputed by three independent routes (the series
#: recursion, the period composition 3125 t0^5/t4, and the direct reversion
#: 1/zt(q)); the printed q^9 digit string above disagrees with all three and
#: is recorded as an erratum of the reference digits.
J_REGULAR_Q9_COMPUTED = 1251589997037399017354527578093
