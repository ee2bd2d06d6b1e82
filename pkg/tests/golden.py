"""Published reference values."""

U3_WORD = (7, 8, 6, 1, 3, 2, 4, 5)
U3_STEPS = ["12", "231", "3421", "45312", "564132", "6751324", "78613245"]
U3 = (5, 6, 4, 1, 3, 2)
U4 = (22, 23, 24, 21, 20, 18, 19, 3, 17, 4, 2, 16, 1, 6, 9, 5, 10, 8, 7, 13, 11, 12, 15, 14)

U32_WORD = ((5, 4, 1, 2, 3), (5, 1, 4, 2, 3))
U32 = ((4, 3, 1, 2), (4, 1, 3, 2))

U33 = (
    (35, 36, 34, 33, 32, 31, 30, 26, 29, 25, 28, 24, 27, 23, 3, 22, 2, 21, 1, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12,
     15, 14, 16, 17, 18, 19, 20),
    (35, 36, 34, 2, 3, 1, 33, 32, 31, 4, 6, 5, 7, 9, 30, 8, 11, 10, 28, 29, 27, 26, 12, 14, 13, 16, 25, 15, 18,
     17, 23, 24, 22, 19, 21, 20),
)
U33_ROW2_COMPLEMENT = (
    U33[0],
    (2, 1, 3, 35, 34, 36, 4, 5, 6, 33, 31, 32, 30, 28, 7, 29, 26, 27, 9, 8, 10, 11, 25, 23, 24, 21, 12, 22, 19,
     20, 14, 13, 15, 18, 16, 17),
)

EXT_BASE = ((4, 2, 5), (2, 6, 1), (4, 1, 2))
EXT_RANK2 = ((5, 3, 6, 2), (3, 7, 2, 1), (5, 1, 3, 2))
EXT_RANK31 = ((5, 2, 6, 4), (2, 6, 1, 7), (5, 1, 2, 4))

MARTIN_2_3 = "200102112"
MARTIN_2_3_STEPS = ["2", "20", "200", "2001", "20010", "200102", "2001021", "20010211", "200102112",
                    "2001021122"]
BINARY_ORDER2 = "0011"
BINARY_ORDER3 = "00010111"

PARTITION_4_WORD = "124111121122313124"
PARTITION_6_CYCLE = (
    "21436111111211112211113211121211122213111213112112113212112212113312121231121232"
    "11132211133211143212133112132112133212313232411231211231411232412131432132142231"
    "1322421312431512231412532112432511332214335"
)
PARTITION_UWORD_STARTS = {3: 2, 4: 6, 5: 6, 6: 48, 7: 877}

ALTERNATING_STALL = "202122"

P3_CYCLE = [(1, 3, 2), (3, 1, 2), (1, 2, 3), (2, 3, 1), (3, 2, 1), (2, 1, 3)]
P3_COVER_RELATIONS = {"a<c", "a<f", "c<d", "f<d", "d<b", "d<e"}
P3_LINEARIZED = (1, 4, 2, 3, 4, 2)

S4_LIST = [
    ["1234", "2341", "3412", "4123"],
    ["1243", "2431", "4312", "3124"],
    ["1342", "3421", "4213", "2134"],
    ["1324", "3241", "2413", "4132"],
    ["1423", "4231", "2314", "3142"],
    ["1432", "4321", "3214", "2143"],
]

KEYGROUP_SMALL_CYCLE = [
    ((1, 2, 3), (1, 3, 2)), ((2, 3, 1), (3, 2, 1)), ((3, 1, 2), (2, 1, 3)),
    ((1, 3, 2), (1, 2, 3)), ((3, 2, 1), (2, 3, 1)), ((2, 1, 3), (3, 1, 2)),
]
KEYGROUP_NO_CYCLE = [
    ((1, 2, 3), (2, 3, 1)), ((2, 3, 1), (3, 1, 2)), ((3, 1, 2), (1, 2, 3)),
    ((1, 3, 2), (2, 1, 3)), ((3, 2, 1), (1, 3, 2)), ((2, 1, 3), (3, 2, 1)),
]


def digits(s):
    return tuple(int(c) for c in s)
