"""Reference values from tools/oracle.py (40-digit mpmath, independent code path)."""

GOLDEN = {
    ('poisson', 0.8, 1): {'c': [1.0, 0.6125848235019749], 'nl': 0.6125848235019749, 'nw': 0.3874151764980252, 'nd': 2.1520925320092996e-35, 'ml': 0.32297360157877397, 'mw': 0.677026398421226, 'md': 4.60122008867941e-35, 'chat': 0.32297360157877397},
    ('poisson', 0.8, 2): {'c': [1.0, 0.6125848235019749, 0.5091617824536533], 'nl': 0.5091617824536533, 'nw': 0.4908382175463467, 'nd': 8.594516743441766e-36, 'ml': 0.25459143895924335, 'mw': 0.7454085610407566, 'md': 3.168441707708298e-35, 'chat': 0.25459143895924335},
    ('poisson', 0.8, 3): {'c': [1.0, 0.6125848235019749, 0.5091617824536533, 0.47188173331273825], 'nl': 0.47188173331273825, 'nw': 0.5281182666872618, 'nd': 8.360169776402102e-36, 'ml': 0.22491811191299804, 'mw': 0.775081888087002, 'md': 4.897403339113355e-36, 'chat': 0.22491811191299804},
    ('poisson', 1.5, 1): {'c': [1.0, 0.48390757184415084], 'nl': 0.48390757184415084, 'nw': 0.5160924281558492, 'nd': 1.0426450646829523e-34, 'ml': 0.3597962349973786, 'mw': 0.6402037650026213, 'md': 4.708990220063107e-34, 'chat': 0.3597962349973786},
    ('poisson', 1.5, 2): {'c': [1.0, 0.48390757184415084, 0.3347689810658199], 'nl': 0.3347689810658199, 'nw': 0.66523101893418, 'nd': 6.160069664804361e-35, 'ml': 0.231682270166139, 'mw': 0.768317729833861, 'md': 1.2248767479662431e-33, 'chat': 0.231682270166139},
    ('poisson', 1.5, 3): {'c': [1.0, 0.48390757184415084, 0.3347689810658199, 0.2716306141938649], 'nl': 0.2716306141938649, 'nw': 0.7283693858061351, 'nd': 3.762167373919327e-35, 'ml': 0.17117878585835025, 'mw': 0.8288212141416498, 'md': 9.41269157650529e-34, 'chat': 0.17117878585835025},
    ('poisson', 2, 1): {'c': [1.0, 0.42630275100686277], 'nl': 0.42630275100686277, 'nw': 0.5736972489931372, 'nd': 4.449999168930854e-34, 'ml': 0.3556601876979796, 'mw': 0.6443398123020204, 'md': 5.1387819118955185e-33, 'chat': 0.3556601876979796},
    ('poisson', 2, 2): {'c': [1.0, 0.42630275100686277, 0.2619639868955367], 'nl': 0.2619639868955367, 'nw': 0.7380360131044633, 'nd': 4.386894465143075e-34, 'ml': 0.07680653632618109, 'mw': 0.49027112583266574, 'md': 0.4329223378411532, 'chat': 0.20435826642994664},
    ('poisson', 2, 3): {'c': [1.0, 0.42630275100686277, 0.2619639868955367, 0.19070287161606533], 'nl': 0.19070287161606533, 'nw': 0.8092971283839346, 'nd': 1.7271794201091485e-34, 'ml': 0.06080030775806352, 'mw': 0.6451957524069991, 'md': 0.2940039398349374, 'chat': 0.13397726424011655},
    ('poisson', 3, 1): {'c': [1.0, 0.34996963165468], 'nl': 0.13611988327877658, 'nw': 0.33526023772083907, 'nd': 0.5286198790003844, 'ml': 0.017751758998245902, 'mw': 0.10164912458642175, 'md': 0.8805991164153324, 'chat': 0.32612942100101633},
    ('poisson', 3, 2): {'c': [1.0, 0.34996963165468, 0.1744758680818796], 'nl': 0.0681084443853145, 'nw': 0.5317411234530963, 'nd': 0.40015043216158913, 'ml': 0.009086104508387139, 'mw': 0.15209554839621925, 'md': 0.8388183470953936, 'chat': 0.15538362269336278},
    ('poisson', 3, 3): {'c': [1.0, 0.34996963165468, 0.1744758680818796, 0.10104898397658292], 'nl': 0.08077517285318687, 'nw': 0.8657158816524617, 'nd': 0.05350894549435145, 'ml': 0.00831825587525807, 'mw': 0.31445642049324235, 'md': 0.6772253236314996, 'chat': 0.08199965834790382},
    ('poisson', 5, 1): {'c': [1.0, 0.26534493304844003], 'nl': 0.00824584654410784, 'nw': 0.04039086907846077, 'nd': 0.9513632843774313, 'ml': 0.00027973956537602707, 'mw': 0.008135667104059106, 'md': 0.9915845933305648, 'chat': 0.2624609532759224},
    ('poisson', 5, 2): {'c': [1.0, 0.26534493304844003, 0.09462402040774293], 'nl': 0.0068259780794070165, 'nw': 0.1828234142311944, 'nd': 0.8103506076893986, 'ml': 0.00023232194290883688, 'mw': 0.013680024923918097, 'md': 0.986087653133173, 'chat': 0.09237907528858642},
    ('poisson', 5, 3): {'c': [1.0, 0.26534493304844003, 0.09462402040774293, 0.03571355806470469], 'nl': 0.006773931524400536, 'nw': 0.6100668846538185, 'nd': 0.383159183821781, 'ml': 0.00023092480236288558, 'mw': 0.041766815654630716, 'md': 0.9580022595430064, 'chat': 0.03351589712141748},
    ('finite', (0.1, 0.3, 0.6), 1): {'c': [1.0, 0.4482152608042847], 'nl': 0.4482152608042847, 'nw': 0.5517847391957152, 'nd': 2.2685104217653362e-33, 'ml': 0.16666666666666666, 'mw': 0.3333333333333333, 'md': 0.5, 'chat': 0.3980209653202763},
    ('finite', (0.1, 0.3, 0.6), 2): {'c': [1.0, 0.4482152608042847, 0.2785808409494244], 'nl': 0.19921650268011742, 'nw': 0.5764075460632372, 'nd': 0.22437595125664542, 'ml': 0.061255034209962506, 'mw': 0.3126694156605429, 'md': 0.6260755501294946, 'chat': 0.24130605454894472},
    ('finite', (0.1, 0.3, 0.6), 3): {'c': [1.0, 0.4482152608042847, 0.2785808409494244, 0.19860436209573135], 'nl': 0.16944569577948265, 'nw': 0.7425162860634541, 'nd': 0.08803801815706326, 'ml': 0.047866772346947715, 'mw': 0.39713408602007283, 'md': 0.5549991416329795, 'chat': 0.16582970797537908},
}
