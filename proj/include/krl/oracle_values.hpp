// Generated by tests/oracles/gen_oracles.py (mpmath 1.3.0, sympy 1.14.0, 40 digits). Do not edit.
#pragma once
#include <array>

namespace krl::oracle {
inline constexpr double gamma_m4_3 = 3.046765363709400938126898;
inline constexpr double gamma_2_3 = 1.354117939426400416945288;
inline constexpr double gamma_1_3 = 2.678938534707747633655693;
inline constexpr double gamma_m1_3 = -4.062353818279201250835864;
inline constexpr double gamma_m17_2 = -2.633521515996347025455769e-5;
inline constexpr double gamma_19_7 = 5.001233624817326578266804e+16;
inline constexpr double gamma_m19p3 = 1.306399639612833403794649e-17;
inline constexpr double U_m5_3_2_3_at0 = 0.8792730042874622700456737;
inline constexpr double T13_at_1_0 = -68.4790800812908113905114;
// L T = c * v^3 with L = v d_x - A d_vv, lambda = 3, A = 1.
inline constexpr double residual_const_A1 = -20.0;
struct KummerRow { double a, b, z, m; };
inline constexpr std::array<KummerRow, 200> kummer_grid = {{
    {-5.463000000000000078159701, 1.927000000000000046185278, -29.61100000000000065369932, 1.92768784871939940070996e+5},
    {4.589999999999999857891453, 5.665000000000000035527137, -6.974999999999999644728632, 0.007675845868861401947803609},
    {4.737000000000000099475983, 1.229999999999999982236432, 0.7479999999999999982236432, 8.738513591361351128679233},
    {-5.565000000000000390798505, 1.814999999999999946709295, -21.71000000000000085265128, 65883.47895873884476971375},
    {-2.822999999999999953814722, 4.974000000000000198951966, 19.22899999999999920419214, -10.76994374638565819658918},
    {-3.338999999999999968025577, 2.25, 2.337000000000000188293825, -0.2389024887484846665539518},
    {2.927999999999999936051154, 3.94600000000000017408297, 10.44800000000000039790393, 7852.286459857095411820311},
    {-5.267999999999999793942607, 4.22299999999999986499688, 8.621999999999999886313162, -0.1633895682570260052543816},
    {-1.514999999999999902300374, 5.849000000000000198951966, 21.57000000000000028421709, 52.35785467156574888253504},
    {-1.91300000000000003375078, 2.126999999999999779731752, 26.0, 1.101371560092022977126659e+5},
    {2.716000000000000191846539, 2.842000000000000081712415, -26.69500000000000028421709, 3.426951524593605997832367e-5},
    {5.304999999999999715782906, 4.315000000000000390798505, 15.70400000000000062527761, 3.021662075323712753924301e+7},
    {3.697000000000000063948846, 2.698999999999999843680598, 19.36400000000000076738615, 2.091361540672959967350241e+9},
    {0.9539999999999999591437927, 5.911999999999999921840299, 13.4260000000000001563194, 177.6080081819548167662878},
    {-0.07199999999999999455990718, 4.834999999999999964472863, 22.80000000000000071054274, -2959.370947173765745076922},
    {5.280000000000000248689958, 4.185999999999999943156581, -22.21999999999999886313162, 1.084246011447353575548417e-7},
    {-3.581999999999999850786025, 0.9729999999999999760191827, -24.80099999999999837996256, 12670.52244147688520485777},
    {2.41900000000000003907985, 2.464999999999999857891453, 14.68200000000000038369308, 2.158762150739474464466829e+6},
    {4.905000000000000248689958, 3.185999999999999943156581, -25.05099999999999837996256, 2.491741016766219112786018e-7},
    {-1.155999999999999916511229, 0.625, 22.09199999999999874944479, 4.476822051032583100667432e+6},
    {-1.348999999999999976907361, 2.162999999999999811706175, 0.4699999999999999733546474, 0.7146688016887281758655221},
    {-4.697000000000000063948846, 2.942000000000000170530257, -20.5779999999999994031441, 3933.300910101615060848445},
    {0.08699999999999999400479567, 5.081000000000000405009359, 13.86400000000000076738615, 9.332174961196911996256806},
    {-0.1910000000000000031086245, 4.469000000000000305533376, -18.19399999999999906208359, 1.379114025702072834653133},
    {-4.762999999999999900524017, 3.029999999999999804600748, -11.48799999999999954525265, 531.3852659700446481870704},
    {-4.708999999999999630517777, 1.971000000000000085265128, -26.73799999999999954525265, 30820.086941576898978315},
    {3.033999999999999808153461, 3.517999999999999793942607, 21.0229999999999996873612, 4.846247335334793711815178e+8},
    {4.22299999999999986499688, 4.238000000000000433431069, -17.04500000000000170530257, 1.103094276707660438298935e-6},
    {1.800000000000000044408921, 2.391999999999999904076731, -24.99899999999999877786649, 0.002576315346733600910841283},
    {0.8419999999999999706901121, 4.350999999999999978683718, 19.21499999999999985789145, 60652.78274276119131504872},
    {3.133999999999999896971303, 1.941999999999999948485652, 0.8659999999999999920063942, 3.674833952886849750485495},
    {3.64699999999999979749532, 4.490000000000000213162821, -28.64300000000000068212103, 5.087324020482357592512061e-5},
    {3.596999999999999975131004, 2.161000000000000031974423, -5.576999999999999957367436, -0.002429520427496991800297113},
    {-1.272999999999999909405801, 5.860000000000000319744231, 15.64899999999999913313786, 1.478619949914131775715591},
    {-5.599000000000000198951966, 2.563000000000000166977543, -7.171000000000000262900812, 383.9664244625909083714829},
    {3.943999999999999950262008, 5.27200000000000024158453, -29.17800000000000082422957, 6.475590555358671740232162e-5},
    {-2.529999999999999804600748, 0.4490000000000000102140518, 22.80300000000000082422957, -2.756323944863400531266012e+6},
    {5.905999999999999694466624, 1.993000000000000104805054, 4.366999999999999992894573, 3389.485450239986796953546},
    {-1.445999999999999952038365, 4.42900000000000027000624, -22.21399999999999863575795, 12.78752369533251943040189},
    {-5.352000000000000312638804, 1.766000000000000014210855, 18.46600000000000108002496, -268.2422459866375618098806},
    {-5.692000000000000170530257, 0.5879999999999999671373985, 1.915000000000000035527137, 1.977519943962802934571143},
    {-1.715000000000000079936058, 2.001999999999999779731752, 14.44699999999999917577043, 115.4937913193853023525306},
    {-5.929999999999999715782906, 5.746000000000000440536496, -18.06299999999999883470991, 1598.518350252152287429276},
    {5.19599999999999972999376, 4.431000000000000049737992, 10.28700000000000081001872, 74218.00086916444273686865},
    {3.664000000000000145661261, 0.4309999999999999942268403, 8.89700000000000024158453, 9.582404679805851812631067e+6},
    {-1.389999999999999902300374, 1.207999999999999962696506, -15.86200000000000009947598, 34.13306113549956723309852},
    {-1.909000000000000030198066, 4.79900000000000037658765, 19.00199999999999889155333, 12.85020431300458331467521},
    {4.235000000000000319744231, 0.7720000000000000195399252, -11.92999999999999971578291, 0.000218547234915930746941305},
    {0.6760000000000000452970994, 3.036999999999999921840299, -22.75100000000000122213351, 0.1984592425546586681545145},
    {2.160000000000000142108547, 4.69599999999999972999376, 2.575000000000000177635684, 3.778168764751949147202718},
    {-1.864999999999999991118216, 5.926999999999999602096068, 5.709999999999999964472863, -0.1303529379031211480356129},
    {-3.572000000000000063948846, 0.8269999999999999573674359, 5.280000000000000248689958, -1.645133726057736565948241},
    {3.157999999999999918287585, 0.8169999999999999484856517, 10.76699999999999945998752, 9.157494581122694509507044e+6},
    {-0.6420000000000000150990331, 5.278999999999999914734872, 22.32300000000000039790393, -862.8282935110006055016213},
    {-5.846000000000000085265128, 5.017000000000000348165941, -4.987000000000000099475983, 34.84727428658147421470207},
    {4.358999999999999985789145, 4.943999999999999950262008, 21.21000000000000085265128, 5.73941539043851774581799e+8},
    {-4.926999999999999602096068, 5.253000000000000113686838, -0.4739999999999999769073611, 1.515092786788078950761633},
    {5.828999999999999737099188, 5.384999999999999786837179, -8.573000000000000397903932, -7.522131807130389713840869e-5},
    {1.625, 5.613000000000000433431069, -21.3039999999999984936494, 0.05893130844193905938545314},
    {-4.825000000000000177635684, 4.432999999999999829469743, -3.575000000000000177635684, 12.95174311120888838348877},
    {-3.455000000000000071054274, 2.133999999999999896971303, 2.221999999999999975131004, -0.2408690894520965558943019},
    {1.41799999999999992716937, 5.604000000000000092370556, -8.054999999999999715782906, 0.2504843208373273836016468},
    {1.705000000000000071054274, 3.725999999999999978683718, -14.81499999999999950262008, 0.0379577043594695740068895},
    {-1.532000000000000028421709, 4.908999999999999808153461, -14.18299999999999982946974, 7.685838827111982431129902},
    {2.916999999999999815258889, 0.341000000000000025313085, -6.573000000000000397903932, -0.0003103799953423327115991557},
    {1.558000000000000051514348, 1.389000000000000012434498, 25.0470000000000005968559, 1.303303566517137671760897e+11},
    {5.961000000000000298427949, 2.251999999999999779731752, -0.302999999999999991562305, 0.4146601780112591744237234},
    {5.399000000000000021316282, 2.458000000000000184741111, 4.761000000000000120792265, 1966.733173429243451873222},
    {0.8569999999999999840127884, 3.017999999999999793942607, -15.22100000000000008526513, 0.1709222680800581462092952},
    {-5.600999999999999978683718, 4.519999999999999573674359, -7.878000000000000113686838, 131.0866885135690646385212},
    {-4.099999999999999644728632, 1.957999999999999962696506, -7.445000000000000284217094, 191.275448142205090921979},
    {3.932999999999999829469743, 2.540999999999999925393013, 3.269000000000000127897692, 80.86508270472555290588662},
    {-2.555000000000000159872116, 4.931000000000000049737992, 16.58299999999999840838427, -2.910802099540049462131267},
    {-3.75, 1.737000000000000099475983, -17.37300000000000110844667, 1801.188458742912599275079},
    {2.084000000000000074606987, 0.543000000000000038191672, 24.36199999999999832311914, 8.778845534933514550024971e+12},
    {-3.895999999999999907629444, 0.7339999999999999857891453, -5.330000000000000071054274, 358.9650630831133889390267},
    {2.967999999999999971578291, 3.689999999999999946709295, -10.00999999999999978683718, 0.003908382103183964212366558},
    {2.310000000000000053290705, 5.605999999999999872102308, 16.65299999999999869260137, 64035.01932966507354175594},
    {5.568999999999999950262008, 4.0, -7.227000000000000312638804, -0.0002419549793007482587243737},
    {-0.01099999999999999936162176, 0.4580000000000000182076576, 23.07300000000000039790393, -5.195344627669972790955539e+7},
    {5.844000000000000305533376, 5.844000000000000305533376, -18.93100000000000093791641, 6.003038975664783188088267e-9},
    {2.605999999999999872102308, 5.142999999999999793942607, 9.987000000000000099475983, 841.2438968539671799568835},
    {0.2510000000000000008881784, 0.3990000000000000213162821, -10.82900000000000062527761, 0.1982243742246933021496293},
    {-2.099000000000000198951966, 3.323999999999999843680598, -5.376000000000000333955086, 6.77968505627819864686371},
    {-3.067000000000000170530257, 3.416999999999999815258889, 20.09100000000000108002496, -15.38842487909045801194053},
    {-3.862999999999999989341859, 1.221999999999999975131004, -23.35800000000000054001248, 11700.27242950719165414116},
    {2.519000000000000127897692, 1.979999999999999982236432, -8.80400000000000027000624, -0.002357112178664429140822834},
    {-2.158999999999999808153461, 3.354999999999999982236432, 28.42500000000000071054274, -46505.9452291374857311656},
    {2.463999999999999968025577, 2.915000000000000035527137, 11.5779999999999994031441, 47716.48207356136354501203},
    {-0.9669999999999999706901121, 0.9340000000000000524025268, 20.14499999999999957367436, -78216.6989145502291675412},
    {5.02700000000000013500312, 2.052000000000000046185278, -6.062999999999999722888333, 0.002296484550867150432551582},
    {1.338999999999999968025577, 3.982000000000000206057393, -29.91600000000000036948222, 0.03893928546012257155634789},
    {2.136000000000000120792265, 5.448999999999999843680598, -22.26800000000000068212103, 0.01871627257171161024838457},
    {-4.285000000000000142108547, 1.050999999999999934274797, 28.22899999999999920419214, -1.157404784188581329561946e+6},
    {-5.197000000000000063948846, 5.038999999999999701572051, 19.50300000000000011368684, -2.061553411899395159926888},
    {2.173000000000000042632564, 4.274000000000000021316282, -10.37599999999999944577667, 0.03916453607776030151419222},
    {1.471999999999999975131004, 0.8489999999999999769073611, -29.26999999999999957367436, -0.002230788186552145838159634},
    {2.669999999999999928945726, 2.575000000000000177635684, -2.357000000000000206057393, 0.08286953424086063307799032},
    {1.169999999999999928945726, 4.365999999999999658939487, 9.648999999999999133137862, 106.7884154260995549508864},
    {1.824000000000000065725203, 1.377999999999999891642233, -4.967999999999999971578291, -0.02430562939762417152723959},
    {0.9270000000000000461852778, 0.8419999999999999706901121, -29.37900000000000133582034, -0.004069671446990814557729838},
    {-1.002000000000000001776357, 4.950000000000000177635684, -27.70899999999999963051778, 6.621800866290993700528102},
    {1.274999999999999911182158, 5.237000000000000099475983, -26.75499999999999900524017, 0.07943878833012347677745146},
    {0.2959999999999999853450561, 2.733000000000000095923269, -8.819000000000000838440428, 0.6236995380791353315612976},
    {-0.197000000000000008437695, 4.209999999999999964472863, -4.842999999999999971578291, 1.168880672271049545534511},
    {-0.9789999999999999813482532, 0.6330000000000000071054274, -28.76399999999999934630068, 43.35990845065740308837106},
    {5.857999999999999651834059, 5.693999999999999950262008, 29.8039999999999984936494, 1.196222047155582513525391e+13},
    {-3.255999999999999783284466, 1.598000000000000087041485, -17.17399999999999948840923, 909.3305887419797042592218},
    {-0.4269999999999999906741266, 4.834999999999999964472863, 25.71600000000000108002496, -41071.42608818744185739862},
    {2.717999999999999971578291, 1.185000000000000053290705, -8.095000000000000639488462, 0.004574477867070053893656051},
    {3.604000000000000092370556, 5.243999999999999772626325, -18.25700000000000144950718, 0.0009567616287176053408011302},
    {-4.605999999999999872102308, 2.363999999999999879207735, 7.429999999999999715782906, -0.9297155047258735797365626},
    {5.285999999999999587885213, 5.767999999999999793942607, -14.43800000000000061106675, 4.318478684221349960721313e-5},
    {0.706999999999999961808328, 2.880999999999999783284466, 21.38400000000000034106051, 3.58491128961915403762995e+6},
    {-5.238999999999999879207735, 1.169999999999999928945726, 11.52100000000000079580786, 12.67140783932958071788373},
    {0.3430000000000000270894418, 3.674999999999999822364316, -21.80799999999999982946974, 0.489461298553188662304501},
    {3.944999999999999840127884, 4.193999999999999950262008, -19.10300000000000153477231, 2.252453052095222530491674e-5},
    {3.974000000000000198951966, 1.11400000000000010125234, -9.268000000000000682121026, -0.00200336129166733863411181},
    {-4.641000000000000014210855, 5.967999999999999971578291, -10.46400000000000041211479, 70.98960706021444654006103},
    {1.439000000000000056843419, 1.41799999999999992716937, 1.199999999999999955591079, 3.367537169431870374349941},
    {-3.081999999999999850786025, 4.955000000000000071054274, 23.72100000000000008526513, -1.20817169237913300240297},
    {2.476999999999999868549594, 3.894000000000000127897692, 8.055999999999999161559572, 501.4808375251388568606391},
    {-3.148000000000000131450406, 0.98099999999999998312461, -7.527999999999999580779786, 224.440493394278940076192},
    {-4.168999999999999594990641, 3.786000000000000031974423, -6.410999999999999587885213, 38.44527562594685683827047},
    {0.2489999999999999991118216, 3.444999999999999840127884, 29.5240000000000009094947, 1.248706645710375611010136e+8},
    {-5.288000000000000255795385, 0.812000000000000055067062, 1.580000000000000071054274, 0.6747865164471784240154841},
    {-0.197000000000000008437695, 3.32100000000000017408297, -14.26999999999999957367436, 1.411211326681772994788634},
    {-4.423000000000000042632564, 3.475000000000000088817842, 0.8659999999999999920063942, 0.2183832151464670997650712},
    {1.189000000000000056843419, 5.530999999999999694466624, 22.9460000000000015063506, 6.541940500731533818787476e+5},
    {-5.543000000000000149213975, 2.339999999999999857891453, 2.942000000000000170530257, 0.1825430043450464420926833},
    {-3.160000000000000142108547, 2.907000000000000028421709, 22.32900000000000062527761, 298.901883625279275204171},
    {2.069999999999999840127884, 3.513999999999999790389893, -0.468999999999999972466469, 0.7631333720664836596772006},
    {-0.4620000000000000217603713, 1.506000000000000005329071, -17.58899999999999863575795, 3.464094169093421894202761},
    {4.088000000000000078159701, 2.876999999999999779731752, 27.35600000000000164845915, 1.268576913229071122661175e+13},
    {-3.338999999999999968025577, 5.649000000000000021316282, 10.74699999999999988631316, 0.0866569943867701410845729},
    {1.647000000000000019539925, 0.4899999999999999911182158, 19.44900000000000162003744, 1.808653796267380663263722e+10},
    {2.365000000000000213162821, 2.004000000000000003552714, -8.240999999999999658939487, -0.00304594499480536265317373},
    {-0.5400000000000000355271368, 1.447999999999999953814722, 15.67500000000000071054274, -8500.242881907650634464554},
    {4.588000000000000078159701, 3.475000000000000088817842, 27.85500000000000042632564, 1.426988956426940135857988e+13},
    {-3.063000000000000166977543, 2.557999999999999829469743, -1.068999999999999950262008, 2.709808562370831534211308},
    {5.586000000000000298427949, 2.516999999999999904076731, -3.028999999999999914734872, -0.008744706225502729932702124},
    {-0.1400000000000000133226763, 5.34799999999999986499688, 23.6479999999999996873612, -3884.308075783223060039056},
    {3.634999999999999786837179, 1.431999999999999939603867, 18.07600000000000051159077, 1.277186111207285476333297e+10},
    {0.3079999999999999960031971, 3.498000000000000220268248, 20.08899999999999863575795, 47877.65868843681615148282},
    {-4.690000000000000390798505, 3.133000000000000007105427, 25.71000000000000085265128, -1240.618436645713513909362},
    {-2.773000000000000131450406, 2.099000000000000198951966, 2.404999999999999804600748, -0.3316730995512014276235307},
    {0.4010000000000000230926389, 2.599000000000000198951966, -7.876000000000000333955086, 0.5334146578867875641392585},
    {0.3880000000000000115463195, 0.9629999999999999671373985, 4.110000000000000319744231, 13.81639357409350792936957},
    {4.397999999999999687361196, 3.25, -28.47400000000000019895197, 2.312816420581640474698807e-7},
    {5.594000000000000305533376, 3.563000000000000166977543, -6.814000000000000056843419, 5.813036985414826647707689e-5},
    {-4.591000000000000191846539, 4.410999999999999587885213, 15.86299999999999954525265, 2.193108249806021892249186},
    {1.116000000000000103028697, 0.4269999999999999906741266, 5.102000000000000312638804, 1127.18433614003436176157},
    {-3.67899999999999982591703, 5.900000000000000355271368, -3.221999999999999975131004, 4.569910125679039341502385},
    {5.323999999999999843680598, 0.3659999999999999920063942, 21.24500000000000099475983, 9.290170660638975493275439e+14},
    {5.937999999999999722888333, 0.887000000000000010658141, 4.948000000000000397903932, 91072.10343835377897513561},
    {4.259999999999999786837179, 3.786999999999999921840299, -10.0229999999999996873612, -0.0001871746033981038043732288},
    {-4.929999999999999715782906, 0.6239999999999999991118216, 20.0779999999999994031441, -18713.34857897024419700408},
    {-0.2020000000000000128785871, 1.667000000000000037303494, -28.03900000000000147792889, 1.872132699866105726689461},
    {-3.124000000000000110134124, 1.502000000000000001776357, 18.42699999999999960209607, 292.4226753401445054490008},
    {1.28800000000000003375078, 5.195000000000000284217094, -28.97899999999999920419214, 0.06966568032872863662879522},
    {-2.547000000000000152766688, 0.3820000000000000062172489, 18.25799999999999911892701, -96580.93140627309434536962},
    {-1.407999999999999918287585, 1.715999999999999969801934, 4.564000000000000056843419, -0.9481843195474455730451898},
    {0.147999999999999992672528, 4.386000000000000120792265, 18.26800000000000068212103, 779.7836504797032260143774},
    {-3.305000000000000159872116, 3.975999999999999978683718, 18.47400000000000019895197, 0.6402207604507368778327708},
    {-3.62999999999999989341859, 1.348999999999999976907361, -9.922000000000000596855898, 491.635388936424599116713},
    {-2.248000000000000220268248, 5.910999999999999587885213, 16.43400000000000105160325, 0.7311340907421298282667802},
    {-2.024999999999999911182158, 5.134999999999999786837179, 10.96100000000000029842795, 0.5507337029338588665350849},
    {0.5659999999999999475974732, 5.90200000000000013500312, -20.01000000000000156319402, 0.4125272903698042021717147},
    {0.4510000000000000119904087, 2.834999999999999964472863, -1.737999999999999989341859, 0.793294970451333191830343},
    {3.740000000000000213162821, 4.948000000000000397903932, -2.017999999999999793942607, 0.2331902957172404717809372},
    {4.564000000000000056843419, 1.578000000000000069277917, 23.12099999999999866417966, 1.378303957773608359260753e+13},
    {-5.809000000000000163424829, 4.354000000000000092370556, 21.45700000000000073896445, -5.430672805731305545029547},
    {0.5490000000000000435207426, 0.5510000000000000452970994, 21.59100000000000108002496, 2.358818814806089534009093e+9},
    {-4.621999999999999886313162, 1.056000000000000049737992, 10.36899999999999977262632, 37.93278387121108781925771},
    {2.121999999999999886313162, 3.004000000000000003552714, -27.3520000000000003126388, 0.001670010383204591280447384},
    {-1.284000000000000030198066, 3.149999999999999911182158, -10.40700000000000002842171, 6.32060983383967390311926},
    {1.266999999999999904076731, 4.543999999999999594990641, 18.93900000000000005684342, 1.42270195138754163832013e+5},
    {3.398000000000000131450406, 4.350999999999999978683718, 28.59799999999999897681846, 3.170944368494600607176162e+11},
    {-2.654999999999999804600748, 2.490000000000000213162821, 0.9220000000000000417443857, 0.2220393600407776647054196},
    {5.40200000000000013500312, 2.924999999999999822364316, -29.94699999999999917577043, -4.446446437148845432840283e-8},
    {4.961000000000000298427949, 4.089999999999999857891453, -9.737999999999999545252649, -0.0001098364894981585651156585},
    {-2.274999999999999911182158, 2.863999999999999879207735, -25.17399999999999948840923, 129.0112490666078258726445},
    {1.006999999999999895194946, 5.57099999999999972999376, 16.49399999999999977262632, 2380.99439387010937128274},
    {5.315000000000000390798505, 0.4510000000000000119904087, 16.96399999999999863575795, 3.104825293029599776143804e+12},
    {4.302999999999999936051154, 3.744000000000000216715534, -10.2729999999999996873612, -0.0001632153528768869153441919},
    {-0.4010000000000000230926389, 5.399000000000000021316282, 24.27499999999999857891453, -5867.707609826582822223905},
    {-1.177999999999999936051154, 2.503000000000000113686838, -23.83800000000000096633812, 15.51418906529874293238652},
    {-4.092999999999999971578291, 0.656000000000000027533531, -1.231999999999999984012788, 20.65771746439560745792851},
    {4.458000000000000184741111, 4.910999999999999587885213, -26.95599999999999951683094, 4.990088039681041407576853e-6},
    {-0.1759999999999999897859482, 5.386000000000000120792265, 22.83699999999999974420462, -2216.09439591775074560158},
    {1.118000000000000104805054, 4.725999999999999978683718, -21.1960000000000015063506, 0.1227057447592506014533085},
    {-1.548000000000000042632564, 5.427999999999999936051154, 25.76200000000000045474735, 1138.904241629688323293314},
    {-1.915999999999999925393013, 5.551000000000000156319402, -17.92599999999999837996256, 14.59541032205921734313546},
    {-1.342999999999999971578291, 2.668000000000000149213975, -24.09900000000000019895197, 20.79619501215670077847153},
    {-3.585999999999999854338739, 3.218999999999999861444167, -12.48199999999999931787897, 152.996696220097081671421},
    {-3.84799999999999986499688, 0.6899999999999999467092948, 26.7970000000000005968559, 1.592552639205385892935929e+6},
    {1.921999999999999930722083, 1.375999999999999889865876, 13.5229999999999996873612, 2.942404496694239231619038e+6},
    {-3.698999999999999843680598, 0.4239999999999999880095913, -17.66600000000000036948222, 21558.10653497063980304151},
    {-0.4500000000000000111022302, 1.526000000000000023092639, -4.533000000000000362376795, 1.940895342918932038464477},
    {2.698999999999999843680598, 5.836999999999999744204615, -10.61400000000000076738615, 0.03820140590389087424978575},
}};
struct URow { double a, b, z, u; };
inline constexpr std::array<URow, 52> tricomi_u_grid = {{
    {-1.666666666666666666666667, 0.6666666666666666666666667, -200.0, 13831.8899099597215921669},
    {-1.666666666666666666666667, 0.6666666666666666666666667, -50.0, 1417.663445941193009414847},
    {-1.666666666666666666666667, 0.6666666666666666666666667, -10.0, 113.692082238344937596407},
    {-1.666666666666666666666667, 0.6666666666666666666666667, -1.0, 6.983102163645439168169174},
    {-1.666666666666666666666667, 0.6666666666666666666666667, -0.01000000000000000020816682, 1.267930687090696120880537},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 0.01000000000000000020816682, 0.497963231919673700339377},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 1.0, -0.9883346617170282021592208},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 5.0, 8.264722606159838520709192},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 10.0, 36.21504690852109598621967},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 20.0, 131.0784222844584404954961},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 30.0, 268.2707671550086813263781},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 60.0, 885.5761154535703129196753},
    {-1.666666666666666666666667, 0.6666666666666666666666667, 150.0, 4171.972842756598513199877},
    {-3.666666666666666666666667, 0.6666666666666666666666667, -200.0, 5.81153930113795330629798e+8},
    {-3.666666666666666666666667, 0.6666666666666666666666667, -50.0, 4.274800254658282579142091e+6},
    {-3.666666666666666666666667, 0.6666666666666666666666667, -10.0, 24422.1167642367871250031},
    {-3.666666666666666666666667, 0.6666666666666666666666667, -1.0, 162.1439721166787296577276},
    {-3.666666666666666666666667, 0.6666666666666666666666667, -0.01000000000000000020816682, 10.85644301320639054608685},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 0.01000000000000000020816682, 3.004622715629902256913571},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 1.0, 0.1466158583098026931321068},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 5.0, -53.47496528026611199325183},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 10.0, 603.4718175372318425623847},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 20.0, 28319.27221556572680596105},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 30.0, 1.652205911881177713788949e+5},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 60.0, 2.670639578285908300981785e+6},
    {-3.666666666666666666666667, 0.6666666666666666666666667, 150.0, 8.767657753186294560996923e+7},
    {-1.333333333333333333333333, 1.333333333333333333333333, -200.0, -2365.219904311122801059561},
    {-1.333333333333333333333333, 1.333333333333333333333333, -50.0, -384.813063206541530500311},
    {-1.333333333333333333333333, 1.333333333333333333333333, -10.0, -52.77118993876876149793729},
    {-1.333333333333333333333333, 1.333333333333333333333333, -1.0, -6.983102163645439168169174},
    {-1.333333333333333333333333, 1.333333333333333333333333, -0.01000000000000000020816682, -5.885212918995153494126833},
    {-1.333333333333333333333333, 1.333333333333333333333333, 0.01000000000000000020816682, 2.311340576828087942177573},
    {-1.333333333333333333333333, 1.333333333333333333333333, 1.0, -0.9883346617170282021592208},
    {-1.333333333333333333333333, 1.333333333333333333333333, 5.0, 4.833239100364046976289521},
    {-1.333333333333333333333333, 1.333333333333333333333333, 10.0, 16.80953573393545080077409},
    {-1.333333333333333333333333, 1.333333333333333333333333, 20.0, 48.2897036488030876595085},
    {-1.333333333333333333333333, 1.333333333333333333333333, 30.0, 86.33752596272317466714781},
    {-1.333333333333333333333333, 1.333333333333333333333333, 60.0, 226.2084434581710400772781},
    {-1.333333333333333333333333, 1.333333333333333333333333, 150.0, 785.1953513094329948245384},
    {0.5, 0.6666666666666666666666667, -200.0, 0.1227314175768548476483901},
    {0.5, 0.6666666666666666666666667, -50.0, 0.2470491958447575205897419},
    {0.5, 0.6666666666666666666666667, -10.0, 0.5749787950297211150734507},
    {0.5, 0.6666666666666666666666667, -1.0, 2.486362984133463000781916},
    {0.5, 0.6666666666666666666666667, -0.01000000000000000020816682, 2.84627874769199115162185},
    {0.5, 0.6666666666666666666666667, 0.01000000000000000020816682, 1.894288322583545611241603},
    {0.5, 0.6666666666666666666666667, 1.0, 0.7885807671322896383841425},
    {0.5, 0.6666666666666666666666667, 5.0, 0.4171715806388555222309171},
    {0.5, 0.6666666666666666666666667, 10.0, 0.3045375081689169971288682},
    {0.5, 0.6666666666666666666666667, 20.0, 0.2192360274733321687670036},
    {0.5, 0.6666666666666666666666667, 30.0, 0.1801464044693422751131531},
    {0.5, 0.6666666666666666666666667, 60.0, 0.1282226999784801606668053},
    {0.5, 0.6666666666666666666666667, 150.0, 0.08142490051480126152659995},
}};
struct TRow { double A; int lambda; double x, v, value; };
inline constexpr std::array<TRow, 66> tricomi_T_grid = {{
    {1.0, 3, 1.0, 0.0, -68.4790800812908113905114},
    {1.0, 3, 1.0, 1.0, -157.0714420011531391056324},
    {1.0, 3, 1.0, -1.0, 5.249765899983263953396051},
    {1.0, 3, 0.1000000000000000055511151, 2.0, -128.4035818478936732770213},
    {1.0, 3, 0.1000000000000000055511151, -2.0, -80.19842548135470873572033},
    {1.0, 3, 0.001000000000000000020816682, 1.0, -3.080080053603042898092938},
    {1.0, 3, 0.001000000000000000020816682, -1.0, -2.960039973465200021686823},
    {1.0, 3, 2.0, 0.2999999999999999888977698, -265.9814029542977653444857},
    {1.0, 3, 0.5, -0.699999999999999955591079, -1.494051178870155711495922},
    {1.0, 3, 0.0, 1.5, -22.78125},
    {1.0, 3, 0.0, -1.5, -22.78125},
    {1.0, 9, 1.0, 0.0, -43141.82045121321117602218},
    {1.0, 9, 1.0, 1.0, -1.365277585914620039107233e+5},
    {1.0, 9, 1.0, -1.0, 17776.32946705264174942298},
    {1.0, 9, 0.1000000000000000055511151, 2.0, -21680.99741437600511868996},
    {1.0, 9, 0.1000000000000000055511151, -2.0, -2319.955062138375623818301},
    {1.0, 9, 0.001000000000000000020816682, 1.0, -3.452402174416481876092407},
    {1.0, 9, 0.001000000000000000020816682, -1.0, -2.786118953858480490715374},
    {1.0, 9, 2.0, 0.2999999999999999888977698, -7.040387864507998547096272e+5},
    {1.0, 9, 0.5, -0.699999999999999955591079, 775.1164062603734694279274},
    {1.0, 9, 0.0, 1.5, -259.49267578125},
    {1.0, 9, 0.0, -1.5, -259.49267578125},
    {0.5, 3, 1.0, 0.0, -122.0158493277032522816901},
    {0.5, 3, 1.0, 1.0, -360.7155366974083211748822},
    {0.5, 3, 1.0, -1.0, 47.72940207914877475569061},
    {0.5, 3, 0.1000000000000000055511151, 2.0, -634.1357979191375316973605},
    {0.5, 3, 0.1000000000000000055511151, -2.0, -498.084872662516727852059},
    {0.5, 3, 0.001000000000000000020816682, 1.0, -17.19695009334900109001408},
    {0.5, 3, 0.001000000000000000020816682, -1.0, -16.85748221322048592601341},
    {0.5, 3, 2.0, 0.2999999999999999888977698, -497.6494648097276927206834},
    {0.5, 3, 0.5, -0.699999999999999955591079, 8.224487865013918052142728},
    {0.5, 3, 0.0, 1.5, -128.8702108712482863220539},
    {0.5, 3, 0.0, -1.5, -128.8702108712482863220539},
    {0.5, 9, 1.0, 0.0, -1.537399701529060978749295e+5},
    {0.5, 9, 1.0, 1.0, -7.397798908064139283531199e+5},
    {0.5, 9, 1.0, -1.0, 1.153848193599162755760123e+5},
    {0.5, 9, 0.1000000000000000055511151, 2.0, -5.793883772474068278960328e+5},
    {0.5, 9, 0.1000000000000000055511151, -2.0, -1.719833338767785176275817e+5},
    {0.5, 9, 0.001000000000000000020816682, 1.0, -145.8604150881042415421141},
    {0.5, 9, 0.001000000000000000020816682, -1.0, -130.8559304425351711521988},
    {0.5, 9, 2.0, 0.2999999999999999888977698, -2.668086644030262770453855e+6},
    {0.5, 9, 0.5, -0.699999999999999955591079, 6929.647785971462442252242},
    {0.5, 9, 0.0, 1.5, -11743.29796564250009109716},
    {0.5, 9, 0.0, -1.5, -11743.29796564250009109716},
    {2.0, 3, 1.0, 0.0, -38.43258424719363390377488},
    {2.0, 3, 1.0, 1.0, -73.32134182058069260612835},
    {2.0, 3, 1.0, -1.0, -6.784751791890776698734245},
    {2.0, 3, 0.1000000000000000055511151, 2.0, -28.57272501849021054410126},
    {2.0, 3, 0.1000000000000000055511151, -2.0, -11.45300886357896586435511},
    {2.0, 3, 0.001000000000000000020816682, 1.0, -0.5586710018763872650904773},
    {2.0, 3, 0.001000000000000000020816682, -1.0, -0.5162161971940361874079908},
    {2.0, 3, 2.0, 0.2999999999999999888977698, -143.5033088928046187051581},
    {2.0, 3, 0.5, -0.699999999999999955591079, -3.480967877604800536816874},
    {2.0, 3, 0.0, 1.5, -4.027194089726508947564184},
    {2.0, 3, 0.0, -1.5, -4.027194089726508947564184},
    {2.0, 9, 1.0, 0.0, -12106.26403786599467968909},
    {2.0, 9, 1.0, 1.0, -28688.5633780460824626035},
    {2.0, 9, 1.0, -1.0, 1055.450518840351817963225},
    {2.0, 9, 0.1000000000000000055511151, 2.0, -1040.840965521228079730001},
    {2.0, 9, 0.1000000000000000055511151, -2.0, -32.41511535458378236116427},
    {2.0, 9, 0.001000000000000000020816682, 1.0, -0.08684017545208989306069419},
    {2.0, 9, 0.001000000000000000020816682, -1.0, -0.05710576234067729288176214},
    {2.0, 9, 2.0, 0.2999999999999999888977698, -1.88086780641453536561711e+5},
    {2.0, 9, 0.5, -0.699999999999999955591079, -58.93640916924094629817104},
    {2.0, 9, 0.0, 1.5, -5.734032209786376997606035},
    {2.0, 9, 0.0, -1.5, -5.734032209786376997606035},
}};
inline constexpr std::array<double, 3> evenness_gaps = {1.20408183796190031645018, 0.1200400801378428739064424, 0.0120004000800133781609249};
inline constexpr double U_kin_ratio_s10_neg = 2.004444938308205075384581;
inline constexpr double U_kin_ratio_s10_pos = 0.9977780246730782782917567;
inline constexpr int specular5_dim = 10;
inline constexpr int specular5_kernel_dim = 4;
inline constexpr int full1_dim = 2;
inline constexpr int full1_kernel_dim = 2;
inline constexpr int full3_dim = 7;
inline constexpr int full3_kernel_dim = 5;
inline constexpr int full5_dim = 16;
inline constexpr int full5_kernel_dim = 9;
inline constexpr int full6_dim = 23;
inline constexpr int full6_kernel_dim = 12;
// p1 for d_{x1x2}phi^1 = 1, alpha_11 = 1 (n = 2): -4*v1**2*v2 + 4*x2
}  // namespace krl::oracle
