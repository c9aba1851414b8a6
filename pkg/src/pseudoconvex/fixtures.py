"""Frozen 13-point instances, one per construction branch plus layer/hull profiles.

Keys naming a branch are instances on which ``partition_13`` takes exactly that branch;
``profile_*`` and ``hull_size_*`` keys fix a layer profile or hull size.
"""

FIXTURES: dict[str, tuple[tuple[int, int], ...]] = {
    'hull10.generic.ear': (
        (135340, 990799), (-172351, -985036), (-67935, -997690), (282783, -959184),
        (356517, -934289), (405207, -914225), (680984, -732299), (915320, -402726),
        (-410988, 136293), (-174924, 182145), (-413484, -450316), (405467, -34961),
        (15452, 315358),
    ),
    'hull10.generic.heart': (
        (915018, 403413), (899475, 436972), (684399, 729107), (373259, 927727),
        (-645234, 763985), (-934820, 355121), (-594479, -804111), (-264916, -964271),
        (782090, -623166), (872049, -489419), (-651519, -460432), (490273, -599063),
        (276519, -26013),
    ),
    'hull10.generic.line_cut': (
        (978976, 203974), (753502, 657446), (-78207, 996937), (-942669, 333731),
        (-968841, -247682), (-430321, -902676), (-105877, -994379), (420620, -907237),
        (696773, -717292), (992047, -125867), (576424, 426860), (-578602, 400787),
        (-720908, -261240),
    ),
    'hull10.halfplane': (
        (-139231, 939742), (-736871, 599601), (-941068, 129965), (-783109, -537810),
        (-311026, -897643), (134948, -940366), (737592, -598713), (949999, 1350),
        (825979, 469318), (346072, 884723), (-543172, 269097), (133050, -591394),
        (569423, 207861),
    ),
    'hull11.segment': (
        (748704, 584759), (192792, 930232), (-340411, 886916), (-702347, 639694),
        (-948675, 50152), (-875796, -368079), (-550654, -774132), (82566, -946405),
        (490605, -813515), (887828, -338025), (926168, 211455), (246696, 189111),
        (-181373, -252440),
    ),
    'hull12.rotating_line': (
        (-932550, -181246), (-670333, -673167), (-197983, -929141), (212808, -925858),
        (702818, -639177), (899644, -305189), (929417, 196684), (680734, 662647),
        (277669, 908515), (-298352, 901934), (-627390, 713360), (-903359, 294010),
        (148807, -65734),
    ),
    'hull13.arcs': (
        (-725399, 613430), (-904451, 290635), (-922808, -225667), (-724831, -614101),
        (-336620, -888362), (94433, -945295), (534797, -785170), (829678, -462747),
        (947539, -68341), (859147, 405421), (563865, 764563), (76167, 946942),
        (-317622, 895330),
    ),
    'hull3.ear': (
        (901745, -298925), (-355221, 881089), (-488499, -814781), (-95227, 113841),
        (-74406, -128420), (147719, -14394), (-7990, 24970), (-16469, -20399),
        (25715, -5108), (3532, -1685), (268, 3904), (-2833, -2699),
        (16, 1),
    ),
    'hull4.ear': (
        (-633502, -707937), (667357, -676118), (435464, 844317), (-784615, 535611),
        (-279842, 66213), (-35902, -285318), (283839, -46164), (58745, 281504),
        (99025, -31508), (48755, 91769), (-89039, 53579), (-59021, -85529),
        (-8763, -5837),
    ),
    'hull5.ear': (
        (915932, -252128), (465712, 828017), (-513872, 799022), (-907318, -281556),
        (7232, -949972), (-385858, 23602), (-198060, -331987), (241028, -302240),
        (319827, 217149), (-13150, 386355), (219570, -18281), (-62902, 211160),
        (-68549, -209395),
    ),
    'hull5.heart': (
        (-836456, -450379), (400744, -861339), (936143, -161668), (170105, 934647),
        (-853493, 417192), (-375040, -194589), (176598, -383840), (419846, -47421),
        (79817, 414908), (-358175, 224122), (166373, 27121), (-58698, 158019),
        (-99814, -135840),
    ),
    'hull6.case1': (
        (-327931, 891606), (-881690, 353726), (-744431, -590188), (252419, -915852),
        (872525, -375767), (633814, 707658), (-433757, 15572), (-123379, -416131),
        (291872, -321245), (423743, 93964), (145875, 408789), (-271276, 338818),
        (-9751, 15783),
    ),
    'hull6.case3': (
        (-945933, 87809), (-695396, -647244), (257076, -914556), (913699, -260105),
        (627624, 713154), (-401592, 860944), (366718, -199998), (364219, 204514),
        (-23264, 417061), (-389633, 150557), (-334242, -250526), (16685, -417376),
        (-30060, 74836),
    ),
    'hull6.generic.halfplane': (
        (312315, 897195), (-598405, 737842), (-949174, -39616), (-417673, -853258),
        (607318, -730524), (916783, 249015), (432308, 125003), (80778, 442709),
        (-434654, 116585), (-236163, -383071), (318271, -318150), (67853, -90708),
        (-108413, 32840),
    ),
    'hull6.splitter.ear': (
        (-929793, 194899), (-688286, -654799), (244898, -917892), (841231, -441397),
        (795881, 518722), (-244125, 918098), (604170, -62201), (417968, 440674),
        (-143551, 590156), (-607309, -8146), (-413712, -444672), (171858, -582542),
        (65791, 19566),
    ),
    'hull6.splitter.heart': (
        (875089, 369755), (379709, 870817), (-710431, 630705), (-926340, -210699),
        (-121551, -942192), (615389, -723738), (-546858, 227677), (-551919, -215120),
        (-33370, -591420), (482582, -343519), (526819, 270837), (60516, 589261),
        (-87443, 93416),
    ),
    'hull7.case1.1': (
        (-257599, -751382), (-413695, 806203), (867089, -249723), (-9662, -838609),
        (-430489, 635396), (-723797, 313017), (822310, -127496), (476223, 116172),
        (-3428, 498861), (-490947, -15651), (222098, -445570), (139008, -187481),
        (100877, 124725),
    ),
    'hull7.case1.2': (
        (-501469, 806863), (-939162, 143092), (-655862, -687274), (249131, -916752),
        (790359, -527099), (906585, 283909), (214892, 925376), (-144337, 549988),
        (-560281, 96978), (-102954, -559214), (560868, -93526), (-22527, -122302),
        (89040, 86818),
    ),
    'hull7.case2.1': (
        (-883409, -349411), (-318934, -894864), (570295, -759779), (949387, -34136),
        (637953, 703929), (-82751, 946389), (-848737, 426785), (412251, 488365),
        (-347241, 536540), (-625328, -131972), (64696, -635819), (613939, -177566),
        (11336, 51247),
    ),
    'hull7.case2.2': (
        (-628033, 597085), (-836762, 260181), (361948, 548435), (596359, 499361),
        (724045, -375651), (109501, -714305), (-14615, -595572), (460596, 139272),
        (-163028, 497604), (-493298, -16916), (-317907, -449714), (370813, -426884),
        (-83529, 69694),
    ),
    'hull7.case3.1': (
        (-785828, 3007), (-557221, -706394), (439162, -711224), (700146, 409635),
        (716276, 255187), (-598540, 432695), (-172235, 550499), (492584, -46605),
        (194789, 432420), (-328936, 428329), (-487424, 28158), (-270517, -485183),
        (187371, -340869),
    ),
    'hull7.case3.2': (
        (682171, 661167), (-257656, 914392), (-846660, 430891), (-896003, -315719),
        (-191441, -930511), (472211, -824328), (937072, -156193), (-587916, 226571),
        (-412479, -476277), (241661, -581876), (625381, -76668), (418897, 470643),
        (-169784, 606756),
    ),
    'hull7.generic.ear': (
        (91787, 652732), (-149427, -682057), (312925, -571988), (951795, 223334),
        (190024, -838209), (-263454, 842858), (-129189, 969798), (428427, 410823),
        (-381503, 406232), (-283192, -284618), (312638, -432707), (142181, 34049),
        (187991, -82384),
    ),
    'hull7.generic.heart': (
        (328229, -817284), (33730, 898346), (438136, -659799), (-693541, 641271),
        (136103, -734818), (193351, -646571), (558136, -634924), (485713, 165832),
        (180086, 499993), (-353869, 223511), (-425341, -246463), (-48300, -497461),
        (399769, -282158),
    ),
    'hull7.halfplane': (
        (656334, -686823), (932153, 183280), (558192, 768715), (-355784, 880862),
        (-918310, 243323), (-782719, -538378), (-206744, -927231), (515123, 387519),
        (-418930, 489919), (-425100, -484575), (406100, -500606), (78279, -115316),
        (-74905, 117535),
    ),
    'hull8.case1': (
        (935380, -166027), (772336, 553171), (228045, 922223), (-453042, 835017),
        (-895965, 315826), (-828214, -465361), (-160511, -936342), (444381, -839658),
        (338631, 538197), (-432772, 465870), (-353274, -528701), (429103, -469253),
        (-25056, 17447),
    ),
    'hull8.case2.1': (
        (663206, 672364), (-71872, -551782), (-639819, -642900), (-469610, 450181),
        (736928, 543366), (-163606, 841804), (-848073, -426104), (-585119, 35160),
        (454386, 19216), (141787, 497817), (-436478, 178501), (-260209, -424061),
        (320159, -344611),
    ),
    'hull8.case2.2': (
        (-301302, 578574), (-624128, -445521), (474530, 353149), (200807, 956025),
        (265181, -775057), (-598616, -264508), (610890, -38239), (459301, -683272),
        (465395, 229620), (-67130, 493700), (-489060, 37390), (-186454, -453313),
        (373163, -349916),
    ),
    'hull8.generic.ear': (
        (-829277, 262491), (-34829, -617267), (317848, 834971), (-899982, 364379),
        (723088, 31603), (654684, -172336), (-624348, -450925), (-514514, -588743),
        (488335, 100980), (220200, 467747), (-476365, 335910), (-423145, -270888),
        (228254, -484274),
    ),
    'hull8.generic.heart': (
        (592326, 805698), (-196048, 980594), (-589822, 807533), (-742989, 669303),
        (-925389, 379019), (-996690, -81292), (-344314, -938854), (955369, -295414),
        (319131, 317074), (201466, 281376), (-15288, -194970), (422759, -8738),
        (-308959, -87727),
    ),
    'hull8.halfplane': (
        (766528, -561190), (914207, 258314), (537745, 783154), (-243782, 918189),
        (-803858, 506273), (-948295, -56883), (-530081, -788361), (197873, -929164),
        (434270, -266558), (306665, 406941), (-360473, 360143), (-283200, -423606),
        (-1179, -40525),
    ),
    'hull9.generic.ear': (
        (960631, 277827), (-363046, 931771), (-727403, 686210), (-992583, 121568),
        (-986661, -162790), (-948379, -317139), (148697, -988883), (823186, -567771),
        (865205, -501418), (860864, -279102), (672814, 376105), (-547675, 447462),
        (796707, 240505),
    ),
    'hull9.generic.heart': (
        (-901790, -432174), (-665656, -746259), (-624526, -781004), (-82677, -996576),
        (-54651, -998506), (785419, -618965), (993297, -115589), (-139029, -106591),
        (-203934, -183367), (-237374, -3790), (-405817, -88952), (-174811, -103928),
        (-262339, -129936),
    ),
    'hull9.halfplane': (
        (-811576, -493806), (-260654, -913542), (376492, -872212), (894797, -319121),
        (879301, 359626), (462653, 829730), (-40936, 949118), (-753401, 578694),
        (-949982, 5772), (-623302, 57476), (39597, -624692), (615578, 113455),
        (-39284, 624712),
    ),
    'hull_size_10': (
        (-189459, -930916), (395749, -863645), (868202, -385650), (944234, 104505),
        (608550, 729498), (100461, 944673), (-452238, 835453), (-869299, 383171),
        (-945866, -88532), (-670010, -673488), (237071, 522348), (-216610, 161473),
        (-364906, -40823),
    ),
    'hull_size_11': (
        (891803, 327394), (582124, 750754), (-43991, 948981), (-527807, 789886),
        (-888379, 336576), (-948362, -55758), (-748136, -585485), (-267471, -911570),
        (232234, -921177), (744723, -589820), (947327, -71211), (303028, 444007),
        (-25026, 354474),
    ),
    'hull_size_12': (
        (-740264, -595407), (-273247, -909855), (124914, -941752), (647255, -695385),
        (905062, -288727), (918910, 241047), (768672, 558250), (273027, 909921),
        (-236692, 920042), (-623389, 716859), (-916456, 250215), (-935397, -165929),
        (-265382, 109397),
    ),
    'hull_size_13': (
        (803702, 506520), (536582, 783951), (38956, 949201), (-370575, 874742),
        (-703887, 638000), (-935799, 163646), (-911617, -267310), (-703392, -638545),
        (-283339, -906763), (202020, -928271), (522226, -793587), (855303, -413469),
        (947220, 72627),
    ),
    'hull_size_3': (
        (184277, 931956), (-846152, -431887), (674734, -668756), (20084, -54623),
        (20010, -8071), (-35021, 23966), (-88698, 34185), (66715, -37252),
        (-57755, 44946), (21849, -39142), (64647, 137937), (-85957, -34490),
        (-25977, 91611),
    ),
    'hull_size_4': (
        (894873, -318909), (133842, 940524), (-939829, 138645), (-317465, -895386),
        (-36741, -83912), (-116657, 323760), (-160521, 297661), (213366, 214717),
        (23714, 108248), (-328045, -14625), (164631, 264489), (378543, 68267),
        (228426, 247186),
    ),
    'hull_size_5': (
        (87350, 945976), (-923018, 224806), (-453242, -834908), (503897, -805350),
        (835551, 452056), (14556, 39219), (129570, -380666), (-262193, 313659),
        (-297621, 37049), (-479755, -149584), (-44581, 3864), (135986, -23339),
        (156407, -66039),
    ),
    'hull_size_6': (
        (942669, 117795), (276235, 908952), (-638011, 703877), (-948885, -46012),
        (-301798, -900787), (730909, -606854), (-156613, -14276), (-88892, -558297),
        (-269497, -282924), (142720, 31476), (-165551, -345055), (47656, -227396),
        (-186277, 203186),
    ),
    'hull_size_7': (
        (534685, 785246), (-297384, 902254), (-872499, 375825), (-874621, -370860),
        (-153307, -937548), (615393, -723735), (949360, 34872), (187371, -461979),
        (-504686, 245558), (-537994, 106336), (140253, -206430), (-296733, 517783),
        (-32874, 50636),
    ),
    'hull_size_8': (
        (834032, 454853), (246753, 917395), (-508297, 802580), (-935526, 165202),
        (-741841, -593441), (-72200, -947252), (537962, -783005), (948566, -52177),
        (-47682, -609803), (-113873, 79598), (-45973, 55277), (403136, -163034),
        (220902, 390940),
    ),
    'hull_size_9': (
        (249394, 916680), (-507076, 803352), (-914969, 255599), (-883533, -349098),
        (-489075, -814436), (64886, -947782), (738578, -597497), (945865, 88542),
        (718332, 621691), (-571001, -252049), (22986, 443152), (263603, -586250),
        (613240, -290564),
    ),
    'profile_11_2': (
        (748704, 584759), (192792, 930232), (-340411, 886916), (-702347, 639694),
        (-948675, 50152), (-875796, -368079), (-550654, -774132), (82566, -946405),
        (490605, -813515), (887828, -338025), (926168, 211455), (246696, 189111),
        (-181373, -252440),
    ),
    'profile_12_1': (
        (-932550, -181246), (-670333, -673167), (-197983, -929141), (212808, -925858),
        (702818, -639177), (899644, -305189), (929417, 196684), (680734, 662647),
        (277669, 908515), (-298352, 901934), (-627390, 713360), (-903359, 294010),
        (148807, -65734),
    ),
    'profile_13': (
        (-725399, 613430), (-904451, 290635), (-922808, -225667), (-724831, -614101),
        (-336620, -888362), (94433, -945295), (534797, -785170), (829678, -462747),
        (947539, -68341), (859147, 405421), (563865, 764563), (76167, 946942),
        (-317622, 895330),
    ),
}

BRANCH_FIXTURES = tuple(k for k in FIXTURES if k.startswith("hull") and "." in k)
