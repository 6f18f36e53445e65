//! Frozen arbitrary-precision reference values, regenerated by
//! `tools/gen_oracles.py` (mpmath, 40 significant digits).
#![allow(dead_code)]

/// `(x, J_0(x), Y_0(x), J_1(x), Y_1(x))` on 100 log-spaced points in `[1e-6, 1e3]`.
pub const BESSEL01: [[f64; 5]; 100] = [
    [
        1.000000000000000000e-6,
        0.9999999999997500000,
        -8.869031481659443703,
        4.999999999999375000e-7,
        -636619.7723721750138,
    ],
    [
        1.232846739442066139e-6,
        0.9999999999996200222,
        -8.735770463680181045,
        6.164233697209159559e-7,
        -516381.9248632388829,
    ],
    [
        1.519911082952933717e-6,
        0.9999999999994224676,
        -8.602509445700328677,
        7.599555414762474091e-7,
        -418853.2997213491178,
    ],
    [
        1.873817422860384048e-6,
        0.9999999999991222021,
        -8.469248427719593690,
        9.369087114297808156e-7,
        -339744.8249847138610,
    ],
    [
        2.310129700083159759e-6,
        0.9999999999986658252,
        -8.335987409737538005,
        1.155064850040809350e-6,
        -275577.5021496659150,
    ],
    [
        2.848035868435801655e-6,
        0.9999999999979721729,
        -8.202726391753506595,
        1.424017934216456996e-6,
        -223529.4082696311159,
    ],
    [
        3.511191734215131321e-6,
        0.9999999999969178832,
        -8.069465373766520318,
        1.755595867104860185e-6,
        -181311.5946405562332,
    ],
    [
        4.328761281083058347e-6,
        0.9999999999953154564,
        -7.936204355775115950,
        2.164380640536459606e-6,
        -147067.4243985189233,
    ],
    [
        5.336699231206309658e-6,
        0.9999999999928799103,
        -7.802943337777107501,
        2.668349615593655385e-6,
        -119290.9221416489034,
    ],
    [
        6.579332246575679923e-6,
        0.9999999999891780968,
        -7.669682319769230179,
        3.289666123270039737e-6,
        -96760.54479112389805,
    ],
    [
        8.111308307896870913e-6,
        0.9999999999835516694,
        -7.536421301746609523,
        4.055654153915081086e-6,
        -78485.46109462837447,
    ],
    [
        0.00001000000000000000000,
        0.9999999999750000000,
        -7.403160283701970133,
        4.999999999937500000e-6,
        -63661.97727536548516,
    ],
    [
        0.00001232846739442066139,
        0.9999999999620022229,
        -7.269899265624456715,
        6.164233697093217106e-6,
        -51638.19253254126818,
    ],
    [
        0.00001519911082952933717,
        0.9999999999422467575,
        -7.136638247497878236,
        7.599555414545219102e-6,
        -41885.33002811126063,
    ],
    [
        0.00001873817422860384048,
        0.9999999999122202066,
        -7.003377229298093963,
        9.369087113890711973e-6,
        -33974.48256624559652,
    ],
    [
        0.00002310129700083159759,
        0.9999999998665825192,
        -6.870116210989123746,
        0.00001155064849964526958,
        -27557.75029699794716,
    ],
    [
        0.00002848035868435801655,
        0.9999999997972172923,
        -6.736855192517362560,
        0.00001424017934073517721,
        -22352.94092621651676,
    ],
    [
        0.00003511191734215131321,
        0.9999999996917883152,
        -6.603594173802979468,
        0.00001755595866837018081,
        -18131.15958410373058,
    ],
    [
        0.00004328761281083058347,
        0.9999999995315456443,
        -6.470333154727137181,
        0.00002164380640034572404,
        -14706.74258499737701,
    ],
    [
        0.00005336699231206309658,
        0.9999999992879910330,
        -6.337072135113011291,
        0.00002668349614653210402,
        -11929.09238958671670,
    ],
    [
        0.00006579332246575679923,
        0.9999999989178096800,
        -6.203811114697616596,
        0.00003289666121507817544,
        -9676.054691040612274,
    ],
    [
        0.00008111308307896870913,
        0.9999999983551669390,
        -6.070550093090012165,
        0.00004055654150612998438,
        -7848.546365387295487,
    ],
    [
        0.0001000000000000000000,
        0.9999999975000000016,
        -5.937289069709337017,
        0.00004999999993750000003,
        -6366.198036455761626,
    ],
    [
        0.0001232846739442066139,
        0.9999999962002222962,
        -5.804028043693001320,
        0.00006164233685498971810,
        -5163.819625971795828,
    ],
    [
        0.0001519911082952933717,
        0.9999999942246757581,
        -5.670767013760749594,
        0.00007599555392819720268,
        -4188.533452288916110,
    ],
    [
        0.0001873817422860384048,
        0.9999999912220206837,
        -5.537505978013527237,
        0.00009369087073181093758,
        -3397.448798401299254,
    ],
    [
        0.0002310129700083159759,
        0.9999999866582519665,
        -5.404244933636102195,
        0.0001155064842336287775,
        -2755.775682388893417,
    ],
    [
        0.0002848035868435801655,
        0.9999999797217293331,
        -5.270983876457732117,
        0.0001424017919779590251,
        -2235.294878500434135,
    ],
    [
        0.0003511191734215131321,
        0.9999999691788317514,
        -5.137722800303653159,
        0.0001755595840052807793,
        -1813.116904117165608,
    ],
    [
        0.0004328761281083058347,
        0.9999999531545649771,
        -5.004461696038637163,
        0.0002164380589845852645,
        -1470.675395856934574,
    ],
    [
        0.0005336699231206309658,
        0.9999999287991045565,
        -4.871200550157720559,
        0.0002668349520608713272,
        -1192.910605942654213,
    ],
    [
        0.0006579332246575679923,
        0.9999998917809709008,
        -4.737939342711777931,
        0.0003289665945285601395,
        -967.6071109857334621,
    ],
    [
        0.0008111308307896870913,
        0.9999998355167005993,
        -4.604678044257233772,
        0.0004055653820404742650,
        -784.8566072215375178,
    ],
    [
        0.001000000000000000000,
        0.9999997500000156250,
        -4.471416611375923269,
        0.0004999999375000026042,
        -636.6221672311394281,
    ],
    [
        0.001232846739442066139,
        0.9999996200222653575,
        -4.338154980102828315,
        0.0006164232526074515575,
        -516.3847952119855749,
    ],
    [
        0.001519911082952933717,
        0.9999994224676583651,
        -4.204893056297268820,
        0.0007599553220270045933,
        -418.8567371487385942,
    ],
    [
        0.001873817422860384048,
        0.9999991222022590785,
        -4.071630701555824125,
        0.0009369083002219867725,
        -339.7489379519306621,
    ],
    [
        0.002310129700083159759,
        0.9999986658256372040,
        -3.938367712633928049,
        0.001155064079512539065,
        -275.5824188817445251,
    ],
    [
        0.002848035868435801655,
        0.9999979721739510462,
        -3.805103791434182363,
        0.001424016490387326249,
        -223.5352800787074488,
    ],
    [
        0.003511191734215131321,
        0.9999969178855262551,
        -3.671838501315010122,
        0.001755593161633154749,
        -181.3185997250747914,
    ],
    [
        0.004328761281083058347,
        0.9999953154619290833,
        -3.538571203607750734,
        0.002164375570977794838,
        -147.0757721597762585,
    ],
    [
        0.005336699231206309658,
        0.9999928799230028197,
        -3.405300965572886486,
        0.002668340116170159182,
        -119.3008580524477947,
    ],
    [
        0.006579332246575679923,
        0.9999891781260756544,
        -3.272026427257728137,
        0.003289648323095767592,
        -96.77235583932987925,
    ],
    [
        0.008111308307896870913,
        0.9999835517370203322,
        -3.138745609401937693,
        0.004055620799669677577,
        -78.49948180487115784,
    ],
    [
        0.01000000000000000000,
        0.9999750001562495660,
        -3.005455637083645958,
        0.004999937500260416124,
        -63.67859628206065637,
    ],
    [
        0.01232846739442066139,
        0.9999620025838824183,
        -2.872152343422904517,
        0.006164116584363075580,
        -51.65785963284689693,
    ],
    [
        0.01519911082952933717,
        0.9999422475913518250,
        -2.738829703339264229,
        0.007599335967393589846,
        -41.90856357901979473,
    ],
    [
        0.01873817422860384048,
        0.9999122221329488642,
        -2.605479027805513318,
        0.009368675912052428013,
        -34.00187699849389427,
    ],
    [
        0.02310129700083159759,
        0.9998665869692099189,
        -2.472087822689257431,
        0.01154987798833713474,
        -27.58998338999898673,
    ],
    [
        0.02848035868435801655,
        0.9997972275722775889,
        -2.338638181372988294,
        0.01423873555991296042,
        -22.39078030926649561,
    ],
    [
        0.03511191734215131321,
        0.9996918120629368815,
        -2.205104535177576650,
        0.01755325333424795271,
        -18.17546768100730706,
    ],
    [
        0.04328761281083058347,
        0.9995316005038002218,
        -2.071450529061019820,
        0.02163873723351758282,
        -14.75847887582599560,
    ],
    [
        0.05336699231206309658,
        0.9992881177620572021,
        -1.937624722739828725,
        0.02667399783897779224,
        -11.98931138748688542,
    ],
    [
        0.06579332246575679923,
        0.9989181024284986072,
        -1.803554743895275358,
        0.03287886421894954102,
        -9.745897370718063824,
    ],
    [
        0.08111308307896870913,
        0.9983558431837062881,
        -1.669139453369315275,
        0.04052319631176456714,
        -7.929221856180570655,
    ],
    [
        0.1000000000000000000,
        0.9975015620660400323,
        -1.534238651350366844,
        0.04993752603624199756,
        -6.458951094702026988,
    ],
    [
        0.1232846739442066139,
        0.9962038303466811630,
        -1.398659918435356074,
        0.06152529752729470180,
        -5.269877565488628067,
    ],
    [
        0.1519911082952933717,
        0.9942330089933745557,
        -1.262142463292478962,
        0.07577631579461367410,
        -4.309023603390026448,
    ],
    [
        0.1873817422860384048,
        0.9912412651170434988,
        -1.124338561174583920,
        0.09328026403401073404,
        -3.533273856593576534,
    ],
    [
        0.2310129700083159759,
        0.9867026865690445444,
        -0.9847947248007669269,
        0.1147376672561060090,
        -2.907429066420924528,
    ],
    [
        0.2848035868435801655,
        0.9798242999623646974,
        -0.8429378943736870445,
        0.1409628338544198966,
        -2.402590951275228535,
    ],
    [
        0.3511191734215131321,
        0.9694155058965749106,
        -0.6980779839949664618,
        0.1728679729241175171,
        -1.994801259657985910,
    ],
    [
        0.4328761281083058347,
        0.9537003408691381089,
        -0.5494493391811053560,
        0.2114079232250212985,
        -1.663868743167309975,
    ],
    [
        0.5336699231206309658,
        0.9300565130997397897,
        -0.3963337265586426880,
        0.2574475789635953147,
        -1.392328704035490357,
    ],
    [
        0.6579332246575679923,
        0.8946738394552104814,
        -0.2383417956357584699,
        0.3114845622550226122,
        -1.164497263230080469,
    ],
    [
        0.8111308307896870913,
        0.8421580331104634654,
        -0.07598464005553613822,
        0.3731129873041382174,
        -0.9656209816874215346,
    ],
    [
        1.000000000000000000,
        0.7651976865579665514,
        0.08825696421567695798,
        0.4400505857449335160,
        -0.7812128213002887165,
    ],
    [
        1.232846739442066139,
        0.6546296985657872198,
        0.2480860234700186238,
        0.5064960964254347214,
        -0.5968676997826707298,
    ],
    [
        1.519911082952933717,
        0.5006913568026989876,
        0.3905284103300748811,
        0.5606414446340107424,
        -0.3992617105536885193,
    ],
    [
        1.873817422860384048,
        0.2970417738344723923,
        0.4923148927927398307,
        0.5816470169010715796,
        -0.1797435273779547588,
    ],
    [
        2.310129700083159759,
        0.05008029316123832242,
        0.5175204734834569441,
        0.5380389837971373532,
        0.05728176347424497211,
    ],
    [
        2.848035868435801655,
        -0.2043301232034466990,
        0.4228685560697840119,
        0.3935216668916969619,
        0.2795548120917838451,
    ],
    [
        3.511191734215131321,
        -0.3816389668988163632,
        0.1844268187202392783,
        0.1326836388733950804,
        0.4109673980271740377,
    ],
    [
        4.328761281083058347,
        -0.3559353174642083161,
        -0.1395279354875111105,
        -0.1810308843373666131,
        0.3422210521208829069,
    ],
    [
        5.336699231206309658,
        -0.06310228663044670777,
        -0.3388394758284028792,
        -0.3461215897042604512,
        0.03187307780892669313,
    ],
    [
        6.579332246575679923,
        0.2713978439179274098,
        -0.1511097681872201158,
        -0.1310183719936042876,
        -0.2835777463578506346,
    ],
    [
        8.111308307896870913,
        0.1447100139144629579,
        0.2395807180944968700,
        0.2489137243705370125,
        -0.1302641864553049601,
    ],
    [
        10.00000000000000000,
        -0.2459357644513483352,
        0.05567116728359939142,
        0.04347274616886143667,
        0.2490154242069538839,
    ],
    [
        12.32846739442066139,
        0.1162760006469161964,
        -0.1951309110036764591,
        -0.1905816408521798737,
        -0.1242717603401477383,
    ],
    [
        15.19911082952933717,
        -0.05424689704026933842,
        0.1972817836681502665,
        0.1956051890334418668,
        0.06075903994558666725,
    ],
    [
        18.73817422860384048,
        0.1140584909804531871,
        -0.1447518751423638990,
        -0.1417618495934704990,
        -0.1179586791802214551,
    ],
    [
        23.10129700083159759,
        -0.1575938746580463452,
        -0.05211032839345367409,
        -0.05553184170282333750,
        0.1565033397399260806,
    ],
    [
        28.48035868435801655,
        -0.1247401813185333601,
        0.08239775720651049668,
        0.08022116969833042580,
        0.1262054952599734719,
    ],
    [
        35.11191734215131321,
        -0.1309581924427862204,
        0.03129337721707304224,
        0.02943205511675073322,
        0.1314169868911390636,
    ],
    [
        43.28761281083058347,
        0.01063685319365604334,
        -0.1207999155836437267,
        -0.1206851211047097575,
        -0.01203269370032083236,
    ],
    [
        53.36699231206309658,
        -0.07388386974694673968,
        0.08043471107826879562,
        0.07974607569843897643,
        0.07464064446619029250,
    ],
    [
        65.79332246575679923,
        -0.05581505027398136209,
        0.08099663780942266242,
        0.08057483078672572494,
        0.05643216435773691490,
    ],
    [
        81.11308307896870913,
        0.01894668347357171560,
        -0.08654143641165226474,
        -0.08642629286352231190,
        -0.01948048473226007285,
    ],
    [
        100.0000000000000000,
        0.01998585030422312242,
        -0.07724431336508315225,
        -0.07714535201411215803,
        -0.02037231200275979330,
    ],
    [
        123.2846739442066139,
        -0.07183898439319789373,
        0.001713798862405859076,
        0.001422463671316825961,
        0.07184652560933988686,
    ],
    [
        151.9911082952933717,
        0.05939503138114357155,
        0.02570487467552640413,
        0.02590040146238770026,
        -0.05931079320260431760,
    ],
    [
        187.3817422860384048,
        -0.01883725100789746543,
        -0.05515971473587755621,
        -0.05521017511183007455,
        0.01869013371063584902,
    ],
    [
        231.0129700083159759,
        -0.03300994589189548893,
        -0.04081803570777080124,
        -0.04088957706506677098,
        0.03292167785546019477,
    ],
    [
        284.8035868435801655,
        0.01380850468984381207,
        0.04521742845583343319,
        0.04524174021624052336,
        -0.01372914268328762385,
    ],
    [
        351.1191734215131321,
        0.001951145831934863065,
        -0.04253595112235280927,
        -0.04253321578856010213,
        -0.002011719644623995217,
    ],
    [
        432.8761281083058347,
        0.004646138038630040858,
        -0.03806687095195895896,
        -0.03806152976210031665,
        -0.004690110783909781394,
    ],
    [
        533.6699231206309658,
        0.01294999378196056116,
        -0.03201884380616273769,
        -0.03200672490778598652,
        -0.01297999817302766063,
    ],
    [
        657.9332246575679923,
        -0.02644104079562868492,
        -0.01638525342744777981,
        -0.01640535216280845954,
        0.02642859637393106211,
    ],
    [
        811.1308307896870913,
        0.02753397689921739646,
        -0.005170549064443309160,
        -0.005153577466414966920,
        -0.02753716937642108912,
    ],
    [
        1000.000000000000000,
        0.02478668615242017456,
        0.004715917977622813400,
        0.004728311907089523918,
        -0.02478433129235177891,
    ],
];

/// `(x, [J_0(x), ..., J_40(x)])`.
pub const BESSEL_JN: [(f64, [f64; 41]); 9] = [
    (
        0.5000000000000000000,
        [
            0.9384698072408129042,
            0.2422684576748738864,
            0.03060402345868264131,
            0.002563729994587244075,
            0.0001607364763642875968,
            8.053627241357474086e-6,
            3.360684628618848795e-7,
            1.201586732776302288e-8,
            3.758223154797609955e-10,
            1.044676758932897988e-11,
            2.613177360822803086e-13,
            5.941853962232461407e-15,
            1.238382559479932690e-16,
            2.382323271215503512e-18,
            4.255415521291363783e-20,
            7.094207076602066998e-22,
            1.108724669876415983e-23,
            1.630810606995296131e-25,
            2.265428803853856108e-27,
            2.981317794802666552e-29,
            3.727201961704714461e-31,
            4.437745611050170175e-33,
            5.043515774284865456e-35,
            5.482703205114263326e-37,
            5.711744202568031494e-39,
            5.712293510469084492e-41,
            5.493079010529981251e-43,
            5.086604820960090155e-45,
            4.541961069161167631e-47,
            3.915765004175912956e-49,
            3.263356828913978498e-51,
            2.631905208612420681e-53,
            2.056297654231462621e-55,
            1.557888038514740095e-57,
            1.145566079943041188e-59,
            8.183020779592047295e-62,
            5.682919984543349305e-64,
            3.839981503757046820e-66,
            2.526410170799890346e-68,
            1.619558587865051527e-70,
            1.012262695900359413e-72,
        ],
    ),
    (
        3.000000000000000000,
        [
            -0.2600519549019334376,
            0.3390589585259364589,
            0.4860912605858910769,
            0.3090627222552516436,
            0.1320341839246122103,
            0.04302843487704758392,
            0.01139393233221306942,
            0.002547294451804693759,
            0.0004934417762088347883,
            0.00008439502130909177869,
            0.00001292835164571588378,
            1.793989662347446497e-6,
            2.275725448320571977e-7,
            2.659069630901108488e-8,
            2.880156512705537921e-9,
            2.907644762406023852e-10,
            2.748824970048593081e-11,
            2.443520564580876777e-12,
            2.049833647640059943e-13,
            1.627981258719515471e-14,
            1.227594673799298650e-15,
            8.811639679549395534e-17,
            6.034881337616725118e-18,
            3.951961562180130628e-19,
            2.479305772614184549e-20,
            1.492767400256465057e-21,
            8.639894479923878988e-23,
            4.814309597007300866e-24,
            2.586279468926257124e-25,
            1.341207832171243166e-26,
            6.722339938146331150e-28,
            3.260155458023063711e-29,
            1.531467510133385346e-30,
            6.975230261491694259e-32,
            3.083147394787390446e-33,
            1.323716669305741997e-34,
            5.524833592674212315e-36,
            2.243392936068958982e-37,
            8.868982962553174090e-39,
            3.416081111178454170e-40,
            1.282792651080675142e-41,
        ],
    ),
    (
        5.000000000000000000,
        [
            -0.1775967713143383043,
            -0.3275791375914652220,
            0.04656511627775221553,
            0.3648312306136669945,
            0.3912323604586481778,
            0.2611405461201700901,
            0.1310487317816920023,
            0.05337641015589071543,
            0.01840521665480200092,
            0.005520283139475687514,
            0.001467802647310474131,
            0.0003509274497662090101,
            0.00007627813166084551355,
            0.00001520758220584945489,
            2.801295809571651895e-6,
            4.796743277517957166e-7,
            7.675015693912240488e-8,
            1.152667665858767467e-8,
            1.631244339273782891e-9,
            2.182825841835621458e-10,
            2.770330052128941687e-11,
            3.343819986753189155e-12,
            3.847873674373720248e-13,
            4.230884669568466381e-14,
            4.454022162926882209e-15,
            4.497660684134053990e-16,
            4.363852120717178133e-17,
            4.074552141181126805e-18,
            3.666419175843881611e-19,
            3.183733576402060000e-20,
            2.671177278250798811e-21,
            2.167915749889857310e-22,
            1.703825161262425383e-23,
            1.298045652604718039e-24,
            9.595100175802427861e-26,
            6.887971304412150434e-27,
            4.805965037458274733e-28,
            3.261834952776518159e-29,
            2.155069265097214220e-30,
            1.387033017124745537e-31,
            8.702241617388818077e-33,
        ],
    ),
    (
        7.500000000000000000,
        [
            0.2663396578803783969,
            0.1352484275797055052,
            -0.2302734105257902622,
            -0.2580609131934603117,
            0.02382467997102201282,
            0.2834739051625504587,
            0.3541405269123785987,
            0.2831509378972552993,
            0.1744078904958312933,
            0.08891922849385145975,
            0.03899825788941221009,
            0.01507612587791443383,
            0.005225044685803462472,
            0.001644017116656646081,
            0.0004742146519395772761,
            0.0001263842505844424164,
            0.00003132235039819238941,
            7.257777781178445114e-6,
            1.579575543149895102e-6,
            3.241848259410513746e-7,
            6.296090828476519605e-8,
            1.160668491102967104e-8,
            2.036527217000961795e-9,
            3.409414287093048219e-10,
            5.458021241610777919e-11,
            8.371930753784964907e-12,
            1.232659275791986852e-12,
            1.745068917061439346e-13,
            2.379034449224947663e-14,
            3.127680502652157636e-15,
            3.970513949272090892e-16,
            4.873065676551507706e-17,
            5.788701001048881143e-18,
            6.662584434353753626e-19,
            7.437330118242204854e-20,
            8.059487285251210753e-21,
            8.485801465892518259e-22,
            8.688212200560677514e-23,
            8.656790532735022176e-24,
            8.400220594414495820e-25,
            7.943888545605347640e-26,
        ],
    ),
    (
        19.90000000000000000,
        [
            0.1728777563926183911,
            0.05011742480737998302,
            -0.1678408292762987948,
            -0.08385427491316868550,
            0.1425581333225795932,
            0.1411640772539042003,
            -0.07162141108443677894,
            -0.1843528678575846701,
            -0.05807407384049715980,
            0.1376601451717578079,
            0.1825907880662077398,
            0.04584818454302384014,
            -0.1319043528930155547,
            -0.2049288111476657152,
            -0.1358418325260451787,
            0.01379457442760214719,
            0.1566376733716765564,
            0.2380851013459480942,
            0.2501408917420036046,
            0.2144310847199880749,
            0.1593255011906369404,
            0.1058211789797846697,
            0.06401568057574276447,
            0.03572102932839028691,
            0.01855554299742071281,
            0.009036059308604397253,
            0.004148123607112948630,
            0.001803258659730945901,
            0.0007451410976845930111,
            0.0002936208111402706125,
            0.0001106381508649394275,
            0.00003996155327663218391,
            0.00001386518095170355756,
            4.629983452464684621e-6,
            1.490543061495898973e-6,
            4.633295214911510640e-7,
            1.392592754076474838e-7,
            4.052313325008606346e-8,
            1.142976280875295315e-8,
            3.128222200427727478e-9,
            8.316106401597475113e-10,
        ],
    ),
    (
        24.90000000000000000,
        [
            0.08324596835301568169,
            -0.1348556995314087433,
            -0.09407775144790795024,
            0.1197428077325480284,
            0.1229314400581604872,
            -0.08024676273394224942,
            -0.1551590556139605874,
            0.005471314245286544658,
            0.1582352965550855522,
            0.09620598474593308731,
            -0.08868880155802548913,
            -0.1674419699331021549,
            -0.05925189476841014972,
            0.1103317099153574323,
            0.1744576962864540549,
            0.08584561924210094272,
            -0.07102923936826014800,
            -0.1771281758599453096,
            -0.1708325268662033270,
            -0.06985860997071010289,
            0.06422099357756943503,
            0.1730248647137935327,
            0.2276281758191907405,
            0.2292096628381901052,
            0.1958113619541725061,
            0.1482580228566002679,
            0.1018955112518521283,
            0.06453581590228771092,
            0.03806167986154290738,
            0.02106474924817023340,
            0.01100480433098213426,
            0.005452851549377078081,
            0.002572577036944726822,
            0.001159394649998926602,
            0.0005005172160644762200,
            0.0002074796749964301431,
            0.00008275897870460450363,
            0.00003182339595664312040,
            0.00001181657554405376582,
            4.243260322396486129e-6,
            1.475565224899082292e-6,
        ],
    ),
    (
        25.00000000000000000,
        [
            0.09626678327595811617,
            -0.1253502495802899047,
            -0.1062948032423813085,
            0.1083430810615088953,
            0.1322971426971434434,
            -0.06600799539842299339,
            -0.1587003408565126408,
            -0.01016816821270307418,
            0.1530061666573989192,
            0.1080921148734383825,
            -0.07517984394852328384,
            -0.1682359900322570096,
            -0.07286782727986288457,
            0.09828287584358864037,
            0.1750820181571950706,
            0.09780898449246983865,
            -0.05771123676623126417,
            -0.1716793675532458568,
            -0.1757727031061831011,
            -0.08143332491965780874,
            0.05199404922830323178,
            0.1646238036849429796,
            0.2245739409624009739,
            0.2306263324088827345,
            0.1997785106699432576,
            0.1529484080774083201,
            0.1061183054848733825,
            0.06777766733112831560,
            0.04028145595036377916,
            0.02245279399768654973,
            0.01180902612426901620,
            0.005888868700559089154,
            0.002795368253117524903,
            0.001267274027421774596,
            0.0005502351792759600321,
            0.0002293656602088366909,
            0.00009198866930878270238,
            0.00003556170740045749195,
            0.00001327398459657147381,
            4.791205773119788414e-6,
            1.674577415562266046e-6,
        ],
    ),
    (
        40.00000000000000000,
        [
            0.007366890584237289554,
            0.1260383180375849992,
            -0.001064974682358039593,
            -0.1261448155058208032,
            -0.01785674764351508088,
            0.1225734659771177870,
            0.04850011413779452763,
            -0.1080234317357794287,
            -0.08630831524531732767,
            0.07350010563765249763,
            0.1193833627822609516,
            -0.01380842424652202183,
            -0.1269779961178480636,
            -0.06237837342418681634,
            0.08643205339212663299,
            0.1228808107986754594,
            0.005728554706879961585,
            -0.1182979670331714902,
            -0.1062818266850757282,
            0.02264432301660333476,
            0.1277939335508488963,
            0.1051496105342455615,
            -0.01738684248989105669,
            -0.1242751372731257238,
            -0.1255295653742035257,
            -0.02636034117591850703,
            0.09257913890430539194,
            0.1467132217515155166,
            0.1054837104602405554,
            0.0009639728928212610198,
            -0.1040859497656497269,
            -0.1570928975412958514,
            -0.1394080414233588428,
            -0.06595996873607829701,
            0.03057409300882965270,
            0.1179359268510887066,
            0.1758137789805755839,
            0.1985288753139473443,
            0.1914646403502270032,
            0.1652539413514839617,
            0.1307805452851667221,
        ],
    ),
    (
        120.0000000000000000,
        [
            0.07182341582915612758,
            -0.01180521143300189112,
            -0.07202016935303949243,
            0.009404539121233908036,
            0.07249039630910118783,
            -0.004571846033960495514,
            -0.07287138347859789579,
            -0.002715292313899294065,
            0.07255459937530964482,
            0.01238923889727391337,
            -0.07069621354071855781,
            -0.02417194115406033968,
            0.06626469099580749554,
            0.03742487935322183878,
            -0.05815596713594276380,
            -0.05099460501827515034,
            0.04540731588137397622,
            0.06310322258664154399,
            -0.02752806948182553875,
            -0.07136164343118920562,
            0.004930215728615623638,
            0.07300504867406108016,
            0.02062155130730575442,
            -0.06544381319471563688,
            -0.04570834636528008189,
            0.04716047464860360412,
            0.06535854413553158361,
            -0.01883843885653991789,
            -0.07383584162097454666,
            -0.01561828723324820388,
            0.06628700279157124811,
            0.04876178862903382794,
            -0.04109341199990377035,
            -0.07067827502898250546,
            0.002220360733963392345,
            0.07193647944489509445,
            0.03974258560889207942,
            -0.04809092807955984680,
            -0.06939865792462065161,
            0.004138444727300100780,
            0.07208864699736571712,
        ],
    ),
];

/// First zero of `J_0`.
pub const J0_FIRST_ZERO: f64 = 2.404825557695772769;

/// Normalized `(0, m)` Jacobi values `[P_0, ..., P_J]` at `x` as `(m, x, values)`.
pub const JACOBI: [(usize, f64, &[f64]); 5] = [
    (
        1,
        0.5000000000000000000,
        &[
            2.000000000000000000,
            0.7071067811865475244,
            -1.299038105676657970,
            -1.937500000000000000,
            -0.5939555565233816381,
            1.349133022392297312,
            1.927471169974789629,
        ],
    ),
    (2, 0.0, &[2.449489742783178098, -3.162277660168379332]),
    (0, 0.3000000000000000000, &[1.414213562373095049]),
    (
        4,
        -0.7000000000000000000,
        &[
            3.162277660168379332,
            -15.34079528577315968,
            39.58383761082293042,
            -70.66111342173996624,
            94.56434442241439039,
            -94.89672264321476802,
            63.17745560989120845,
            -6.646662814221467707,
            -52.28278975329320903,
        ],
    ),
    (
        10,
        0.9000000000000000000,
        &[
            4.690415759823429555,
            2.039607805437113932,
            -0.3970988541912454323,
            -2.230339099778327430,
            -3.210889143796465609,
            -3.264478704602007356,
        ],
    ),
];

/// Penetrable disk, `k = 16`, radius 0.5, `q = 0.3`: `(delta, re, im)` of
/// `u_inf` with `u_inf = k^2 int e^{-ik x.y} q u dy`.
pub const DISK_FAR_FIELD: [(f64, f64, f64); 16] = [
    (0.0, 28.87583534065579410, 40.80840690291132433),
    (0.3926990816987241548, -1.963649848288552631, 7.353150603254258760),
    (0.7853981633974483096, -0.3275622633440009005, -2.716283082503866488),
    (1.178097245096172464, 0.4105583280970526023, 1.877628163731648142),
    (1.570796326794896619, -0.2714676164325997840, -2.107718367531318336),
    (1.963495408493620774, -0.005145005980513702747, 2.389682336445323788),
    (2.356194490192344929, -0.3820679936360716256, -0.9606844051627108310),
    (2.748893571891069084, 1.306175568886910218, -0.8690968916581037219),
    (3.141592653589793238, 0.4515319382207612989, -1.349694820585411520),
    (3.534291735288517393, 1.306175568886910218, -0.8690968916581037219),
    (3.926990816987241548, -0.3820679936360716256, -0.9606844051627108310),
    (4.319689898685965703, -0.005145005980513702747, 2.389682336445323788),
    (4.712388980384689858, -0.2714676164325997840, -2.107718367531318336),
    (5.105088062083414013, 0.4105583280970526023, 1.877628163731648142),
    (5.497787143782138167, -0.3275622633440009005, -2.716283082503866488),
    (5.890486225480862322, -1.963649848288552631, 7.353150603254258760),
];
