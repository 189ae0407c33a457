"""Fixed reference values for the regression and acceptance tests."""

# |U_k| for k = 0..7
U_SIZES = [1, 1, 3, 16, 131, 1496, 22482, 426833]

# number of submonoids containing S_k, k = 1..14
N_K = {
    1: 1, 2: 2, 3: 3, 4: 6, 5: 10, 6: 31, 7: 63, 8: 287, 9: 1099, 10: 8640,
    11: 62658, 12: 1546891, 13: 29789119, 14: 2525655957,
}

# Hasse diagram on partitions of 6 other than 1^6, edges coarser -> finer
HASSE_6_EDGES = {
    ("6", "51"), ("6", "42"), ("6", "33"),
    ("51", "411"), ("51", "321"),
    ("42", "321"), ("42", "222"),
    ("411", "3111"), ("411", "2211"),
    ("33", "321"), ("33", "3111"),
    ("321", "2211"),
    ("3111", "21111"),
    ("222", "2211"),
    ("2211", "21111"),
}

# interval [874, 653221] in the order on partitions of 19
INTERVAL_19_NODES = {
    "874", "8731", "8722", "8641", "8542", "7642", "7543",
    "85321", "76321", "86221", "75322", "65431", "65422", "653221",
}
INTERVAL_19_EDGES = {
    ("874", "8731"), ("874", "8722"), ("874", "8641"), ("874", "8542"), ("874", "7642"), ("874", "7543"),
    ("8731", "85321"), ("8731", "76321"),
    ("8722", "86221"), ("8722", "75322"),
    ("8641", "86221"), ("8641", "65431"),
    ("86221", "653221"),
    ("8542", "85321"), ("8542", "65422"),
    ("85321", "653221"),
    ("7642", "76321"), ("7642", "65422"),
    ("76321", "653221"),
    ("7543", "75322"), ("7543", "65431"),
    ("75322", "653221"),
    ("65431", "653221"),
    ("65422", "653221"),
}

# submonoid lattices: antichain label -> size
LATTICE = {
    4: {"∅": 24, "4": 25, "22": 43, "31": 41, "31, 22": 59, "211": 131},
    5: {
        "∅": 120, "5": 121, "32": 221, "41": 146, "41, 32": 246, "311": 346,
        "32, 311": 446, "221": 696, "311, 221": 896, "2111": 1496,
    },
    6: {
        "∅": 720, "6": 721, "33": 921, "42": 946, "51": 757, "42, 33": 1146,
        "51, 33": 957, "222": 2296, "51, 42": 982, "33, 222": 2496, "51, 222": 2332,
        "51, 42, 33": 1182, "51, 33, 222": 2532, "411": 1207, "411, 33": 1407,
        "42, 411": 1432, "3111": 3807, "42, 411, 33": 1632, "42, 3111": 4032,
        "411, 222": 2782, "411, 33, 222": 2982, "321": 4782, "411, 321": 5232,
        "321, 222": 6132, "321, 3111": 7632, "411, 321, 222": 6582,
        "3111, 222": 5382, "321, 3111, 222": 8982, "2211": 14682,
        "3111, 2211": 17082, "21111": 22482,
    },
}

# the worked product in U_9, signed blocks (-i is the bottom point i)
EXAMPLE_PI = [[1, 3, -1, -2], [2, -4], [4, 6, -3, -6], [5, -7], [7, 8, 9, -5, -8, -9]]
EXAMPLE_PI_TOP = [[1, 3], [2], [4, 6], [5], [7, 8, 9]]
EXAMPLE_PI_BOT = [[1, 2], [4], [3, 6], [7], [5, 8, 9]]
EXAMPLE_PI_TYPE = (3, 2, 2, 1, 1)

PRODUCT_LEFT = [[1, 2, 7, -2, -8, -9], [3, -1], [4, 8, -3, -5], [5, 9, -4, -6], [6, -7]]
PRODUCT_RIGHT = [[1, -2], [2, 3, -1, -4], [4, 6, -3, -5], [5, -9], [7, 8, 9, -6, -7, -8]]
PRODUCT_RESULT = [[1, 2, 4, 6, 7, 8, -1, -4, -6, -7, -8, -9], [3, -2], [5, 9, -3, -5]]
