// Reference values computed once with mpmath at 50 significant digits and frozen here.

/// `(x, K1(x))`
pub const BESSEL_K1: &[(f64, f64)] = &[
    (1.0e-8, 99999999.999999904817),
    (1.0e-6, 999999.99999278427896),
    (0.0001, 9999.9995086864049573),
    (0.01, 99.973894118296247643),
    (0.1, 9.8538447808706061348),
    (0.5, 1.6564411200033008937),
    (1.0, 0.60190723019723457474),
    (1.5, 0.27738780045684381609),
    (1.99, 0.14171756162240130536),
    (2.0, 0.13986588181652242728),
    (2.01, 0.13804087731920766671),
    (3.0, 0.040156431128194184377),
    (5.0, 0.0040446134454521642084),
    (7.5, 0.00026529739012528952599),
    (10.0, 0.000018648773453825584597),
    (20.0, 5.8830579695570381777e-10),
    (50.0, 3.4441022267175556126e-23),
    (100.0, 4.6798537356369092866e-45),
    (300.0, 3.7298958583323726986e-132),
    (700.0, 4.6731107967079661091e-306),
];

/// `(x, E1(x))`
pub const EXP_INTEGRAL_E1: &[(f64, f64)] = &[
    (1.0e-8, 17.843465089050832587),
    (1.0e-5, 10.935719800043695615),
    (0.001, 6.331539364136149332),
    (0.05, 2.4678984885099743696),
    (0.2, 1.2226505441838930883),
    (0.5, 0.55977359477616081175),
    (0.99, 0.2230998257901772369),
    (1.0, 0.21938393439552027368),
    (1.01, 0.21574162379448997481),
    (1.5, 0.1000195824066326519),
    (2.0, 0.048900510708061119567),
    (3.0, 0.013048381094197037413),
    (5.0, 0.0011482955912753257973),
    (8.0, 0.000037665622843924901773),
    (12.0, 4.7510818246724939326e-7),
    (20.0, 9.8355252906498816904e-11),
    (35.0, 1.7527059389947372001e-17),
    (50.0, 3.7832640295504590187e-24),
    (100.0, 3.6835977616820321802e-46),
    (500.0, 1.4220767822536384221e-220),
];

/// `(x, Γ(x))`
pub const GAMMA: &[(f64, f64)] = &[
    (0.5, 1.7724538509055160273),
    (1.5, 0.88622692545275801365),
    (2.5, 1.3293403881791370205),
    (3.5, 3.3233509704478425512),
    (4.5, 11.631728396567448929),
    (5.5, 52.342777784553520181),
    (6.5, 287.885277815044361),
    (7.5, 1871.2543057977883465),
    (8.5, 14034.407293483412599),
    (9.5, 119292.46199460900709),
    (10.5, 1133278.3889487855673),
    (11.5, 11899423.083962248457),
    (12.5, 136843365.46556585726),
    (13.5, 1710542068.3195732157),
    (14.5, 23092317922.314238412),
    (15.5, 334838609873.55645697),
    (16.5, 5189998453040.1250831),
    (17.5, 85634974475162.063871),
    (18.5, 1498612053315336.1177),
    (19.5, 27724322986333718.178),
];

/// `(a, b, c, z, 2F1(a, b; c; z))`
pub const HYP2F1: &[(f64, f64, f64, f64, f64)] = &[
    (2.5, 1.5, 2.0, 0.1, 1.2189365946210871636),
    (2.5, 1.5, 2.0, 0.3, 1.9611046681062308563),
    (2.5, 1.5, 2.0, 0.5, 3.7311978701083123947),
    (2.5, 1.5, 2.0, 0.7, 10.025791495397282758),
    (2.5, 1.5, 2.0, 0.9, 86.828466102493039035),
    (4.5, 1.5, 4.0, 0.1, 1.1952858629539564773),
    (4.5, 1.5, 4.0, 0.3, 1.8381135679232512925),
    (4.5, 1.5, 4.0, 0.5, 3.3064848029717244098),
    (4.5, 1.5, 4.0, 0.7, 8.2579565541040906598),
    (4.5, 1.5, 4.0, 0.9, 64.41002340746149775),
    (6.5, 1.5, 6.0, 0.1, 1.1873232227513696876),
    (6.5, 1.5, 6.0, 0.3, 1.7957311369025377612),
    (6.5, 1.5, 6.0, 0.5, 3.1557422939315190288),
    (6.5, 1.5, 6.0, 0.7, 7.6047324445062055068),
    (6.5, 1.5, 6.0, 0.9, 55.579360456659068501),
    (8.5, 1.5, 8.0, 0.1, 1.1833217367997877697),
    (8.5, 1.5, 8.0, 0.3, 1.7741696941883444107),
    (8.5, 1.5, 8.0, 0.5, 3.0777704893739802979),
    (8.5, 1.5, 8.0, 0.7, 7.2584521242113663111),
    (8.5, 1.5, 8.0, 0.9, 50.686641929439014073),
];

/// `(a, b, c, w, 2F1(a, b; c; 1 - w))`
pub const HYP2F1_NEAR_ONE: &[(f64, f64, f64, f64, f64)] = &[
    (2.5, 1.5, 2.0, 1e-3, 849038.05073039281502),
    (2.5, 1.5, 2.0, 1e-6, 848826575362.29786826),
    (2.5, 1.5, 2.0, 1e-9, 848826363368981713.27),
    (2.5, 1.5, 2.0, 1e-12, 8.4882636315698733069e+23),
    (2.5, 1.5, 2.0, 0.3, 10.025791495397282758),
    (4.5, 1.5, 4.0, 1e-3, 582776.2095646851815),
    (4.5, 1.5, 4.0, 1e-6, 582053090864.84924764),
    (4.5, 1.5, 4.0, 1e-9, 582052364035068383.87),
    (4.5, 1.5, 4.0, 1e-12, 5.8205236330823050769e+23),
    (4.5, 1.5, 4.0, 0.3, 8.2579565541040906598),
    (6.5, 1.5, 6.0, 1e-3, 471395.70044933920679),
    (6.5, 1.5, 6.0, 1e-6, 470346402345.95099345),
    (6.5, 1.5, 6.0, 1e-9, 470345345145148060.64),
    (6.5, 1.5, 6.0, 1e-12, 4.7034534408792934146e+23),
    (6.5, 1.5, 6.0, 0.3, 7.6047324445062055068),
];
