"""Digital-filter tables for order-0/1 Hankel transforms on an
exponentially spaced node grid (generated by tools/make_filters.py;
spectral construction from the Bessel kernel's Mellin-line transfer
function with an erfc band window -- see that script for details).

Node exponents: 451 points, spacing 0.08, range
[-28.0, 8.0].  Certified max relative error on the
closed-form validation pairs: 1.77e-07.
"""

import numpy as np

LOG_SPACING = 0.08

OFFSETS = np.array([
    -28.0, -27.92, -27.84, -27.76,
    -27.68, -27.6, -27.52, -27.44,
    -27.36, -27.28, -27.2, -27.12,
    -27.04, -26.96, -26.88, -26.8,
    -26.72, -26.64, -26.56, -26.48,
    -26.4, -26.32, -26.24, -26.16,
    -26.08, -26.0, -25.92, -25.84,
    -25.759999999999998, -25.68, -25.6, -25.52,
    -25.44, -25.36, -25.28, -25.2,
    -25.12, -25.04, -24.96, -24.88,
    -24.8, -24.72, -24.64, -24.56,
    -24.48, -24.4, -24.32, -24.24,
    -24.16, -24.08, -24.0, -23.92,
    -23.84, -23.759999999999998, -23.68, -23.6,
    -23.52, -23.439999999999998, -23.36, -23.28,
    -23.2, -23.12, -23.04, -22.96,
    -22.88, -22.8, -22.72, -22.64,
    -22.56, -22.48, -22.4, -22.32,
    -22.240000000000002, -22.16, -22.08, -22.0,
    -21.92, -21.84, -21.759999999999998, -21.68,
    -21.6, -21.52, -21.439999999999998, -21.36,
    -21.28, -21.2, -21.12, -21.04,
    -20.96, -20.88, -20.8, -20.72,
    -20.64, -20.56, -20.48, -20.4,
    -20.32, -20.240000000000002, -20.16, -20.08,
    -20.0, -19.92, -19.84, -19.759999999999998,
    -19.68, -19.6, -19.52, -19.439999999999998,
    -19.36, -19.28, -19.2, -19.119999999999997,
    -19.04, -18.96, -18.88, -18.799999999999997,
    -18.72, -18.64, -18.560000000000002, -18.48,
    -18.4, -18.32, -18.240000000000002, -18.16,
    -18.08, -18.0, -17.92, -17.84,
    -17.759999999999998, -17.68, -17.6, -17.52,
    -17.439999999999998, -17.36, -17.28, -17.2,
    -17.119999999999997, -17.04, -16.96, -16.88,
    -16.799999999999997, -16.72, -16.64, -16.560000000000002,
    -16.48, -16.4, -16.32, -16.240000000000002,
    -16.16, -16.08, -16.0, -15.92,
    -15.84, -15.76, -15.68, -15.6,
    -15.52, -15.44, -15.36, -15.28,
    -15.2, -15.12, -15.04, -14.959999999999999,
    -14.879999999999999, -14.799999999999999, -14.719999999999999, -14.64,
    -14.56, -14.48, -14.4, -14.32,
    -14.24, -14.16, -14.08, -14.0,
    -13.92, -13.84, -13.76, -13.68,
    -13.6, -13.52, -13.44, -13.36,
    -13.28, -13.2, -13.12, -13.04,
    -12.959999999999999, -12.879999999999999, -12.799999999999999, -12.719999999999999,
    -12.64, -12.56, -12.48, -12.4,
    -12.32, -12.24, -12.16, -12.08,
    -12.0, -11.919999999999998, -11.84, -11.759999999999998,
    -11.68, -11.600000000000001, -11.52, -11.440000000000001,
    -11.36, -11.280000000000001, -11.2, -11.120000000000001,
    -11.04, -10.96, -10.879999999999999, -10.8,
    -10.719999999999999, -10.64, -10.559999999999999, -10.48,
    -10.399999999999999, -10.32, -10.239999999999998, -10.16,
    -10.079999999999998, -10.0, -9.919999999999998, -9.84,
    -9.759999999999998, -9.68, -9.599999999999998, -9.52,
    -9.440000000000001, -9.36, -9.280000000000001, -9.2,
    -9.120000000000001, -9.04, -8.96, -8.879999999999999,
    -8.8, -8.719999999999999, -8.64, -8.559999999999999,
    -8.48, -8.399999999999999, -8.32, -8.239999999999998,
    -8.16, -8.079999999999998, -8.0, -7.919999999999998,
    -7.84, -7.759999999999998, -7.68, -7.599999999999998,
    -7.52, -7.440000000000001, -7.359999999999999, -7.280000000000001,
    -7.199999999999999, -7.120000000000001, -7.039999999999999, -6.960000000000001,
    -6.879999999999999, -6.800000000000001, -6.719999999999999, -6.640000000000001,
    -6.559999999999999, -6.48, -6.399999999999999, -6.32,
    -6.239999999999998, -6.16, -6.079999999999998, -6.0,
    -5.919999999999998, -5.84, -5.759999999999998, -5.68,
    -5.599999999999998, -5.52, -5.440000000000001, -5.359999999999999,
    -5.280000000000001, -5.199999999999999, -5.120000000000001, -5.039999999999999,
    -4.960000000000001, -4.879999999999999, -4.800000000000001, -4.719999999999999,
    -4.640000000000001, -4.559999999999999, -4.48, -4.399999999999999,
    -4.32, -4.239999999999998, -4.16, -4.079999999999998,
    -4.0, -3.919999999999998, -3.84, -3.759999999999998,
    -3.6799999999999997, -3.599999999999998, -3.5199999999999996, -3.4399999999999977,
    -3.3599999999999994, -3.280000000000001, -3.1999999999999993, -3.120000000000001,
    -3.039999999999999, -2.960000000000001, -2.879999999999999, -2.8000000000000007,
    -2.719999999999999, -2.6400000000000006, -2.5599999999999987, -2.4800000000000004,
    -2.3999999999999986, -2.3200000000000003, -2.2399999999999984, -2.16,
    -2.0799999999999983, -2.0, -1.9199999999999982, -1.8399999999999999,
    -1.759999999999998, -1.6799999999999997, -1.5999999999999979, -1.5199999999999996,
    -1.4399999999999977, -1.3599999999999994, -1.2800000000000011, -1.1999999999999993,
    -1.120000000000001, -1.0399999999999991, -0.9600000000000009, -0.879999999999999,
    -0.8000000000000007, -0.7199999999999989, -0.6400000000000006, -0.5599999999999987,
    -0.4800000000000004, -0.3999999999999986, -0.3200000000000003, -0.23999999999999844,
    -0.16000000000000014, -0.0799999999999983, 0.0, 0.08000000000000185,
    0.16000000000000014, 0.240000000000002, 0.3200000000000003, 0.40000000000000213,
    0.4800000000000004, 0.5600000000000023, 0.6400000000000006, 0.7199999999999989,
    0.8000000000000007, 0.879999999999999, 0.9600000000000009, 1.0399999999999991,
    1.120000000000001, 1.1999999999999993, 1.2800000000000011, 1.3599999999999994,
    1.4400000000000013, 1.5199999999999996, 1.6000000000000014, 1.6799999999999997,
    1.7600000000000016, 1.8399999999999999, 1.9200000000000017, 2.0,
    2.080000000000002, 2.16, 2.240000000000002, 2.3200000000000003,
    2.400000000000002, 2.4800000000000004, 2.5600000000000023, 2.6400000000000006,
    2.719999999999999, 2.8000000000000007, 2.879999999999999, 2.960000000000001,
    3.039999999999999, 3.120000000000001, 3.1999999999999993, 3.280000000000001,
    3.3599999999999994, 3.4400000000000013, 3.5199999999999996, 3.6000000000000014,
    3.6799999999999997, 3.7600000000000016, 3.84, 3.9200000000000017,
    4.0, 4.079999999999998, 4.160000000000004, 4.240000000000002,
    4.32, 4.399999999999999, 4.480000000000004, 4.560000000000002,
    4.640000000000001, 4.719999999999999, 4.799999999999997, 4.880000000000003,
    4.960000000000001, 5.039999999999999, 5.119999999999997, 5.200000000000003,
    5.280000000000001, 5.359999999999999, 5.439999999999998, 5.520000000000003,
    5.600000000000001, 5.68, 5.759999999999998, 5.840000000000003,
    5.920000000000002, 6.0, 6.079999999999998, 6.160000000000004,
    6.240000000000002, 6.32, 6.399999999999999, 6.480000000000004,
    6.560000000000002, 6.640000000000001, 6.719999999999999, 6.800000000000004,
    6.880000000000003, 6.960000000000001, 7.039999999999999, 7.119999999999997,
    7.200000000000003, 7.280000000000001, 7.359999999999999, 7.439999999999998,
    7.520000000000003, 7.600000000000001, 7.68, 7.759999999999998,
    7.840000000000003, 7.920000000000002, 8.0,
])

WEIGHTS_J0 = np.array([
    5.4624463209274173e-14, 6.007307055836694e-14, 6.483596977599734e-14, 7.063357274946424e-14,
    7.603495567966156e-14, 8.2808419418814e-14, 8.938825520105418e-14, 9.7212166189353e-14,
    1.0470180021413192e-13, 1.1398285079726652e-13, 1.228539360330809e-13, 1.335666583706737e-13,
    1.4423301733370032e-13, 1.5678367487777474e-13, 1.6959871586797443e-13, 1.8371570449622493e-13,
    1.9891061333785824e-13, 2.1586166927760787e-13, 2.334554814737523e-13, 2.529499886697077e-13,
    2.7372266019407343e-13, 2.9712743469201556e-13, 3.213307787400332e-13, 3.48707311296158e-13,
    3.7707225368739746e-13, 4.0912676263872163e-13, 4.425830573229207e-13, 4.799222998659065e-13,
    5.190746497156003e-13, 5.630443950840333e-13, 6.095740009559052e-13, 6.607225318605078e-13,
    7.154210642946585e-13, 7.755644728318849e-13, 8.390891460348128e-13, 9.102054998224307e-13,
    9.852103013720975e-13, 1.0677751172987188e-12, 1.1563607655351728e-12, 1.2532936866979275e-12,
    1.3568984871776077e-12, 1.4707318276607084e-12, 1.592120463584999e-12, 1.7255846740463685e-12,
    1.8685671826935257e-12, 2.0246882869904973e-12, 2.192631852391678e-12, 2.3757035698101664e-12,
    2.5729743691685417e-12, 2.7885224574340783e-12, 3.0199463109765706e-12, 3.272361954014181e-12,
    3.5443731150610267e-12, 3.8395167790417704e-12, 4.158871168720018e-12, 4.5058868730215654e-12,
    4.880849653151025e-12, 5.287295023148387e-12, 5.7269490809814995e-12, 6.204519941732464e-12,
    6.721140940281092e-12, 7.281621886891185e-12, 7.887327977931931e-12, 8.54453064167605e-12,
    9.256122207978703e-12, 1.0028272911335903e-11, 1.0861694643644112e-11, 1.1765833479060912e-11,
    1.274685870600017e-11, 1.3809742418583238e-11, 1.4958007255358396e-11, 1.620396188296314e-11,
    1.7554294908953213e-11, 1.9017007180072282e-11, 2.059955532510716e-11, 2.2315660499702437e-11,
    2.4173885281377808e-11, 2.6188045176835626e-11, 2.836877060257739e-11, 3.073182187808822e-11,
    3.3290653608428645e-11, 3.606421769175121e-11, 3.906714061457792e-11, 4.232166749229582e-11,
    4.5845959638817514e-11, 4.9664848193900616e-11, 5.380070804637267e-11, 5.828234422459466e-11,
    6.313584897911312e-11, 6.839489662767657e-11, 7.409061255863775e-11, 8.026181621967525e-11,
    8.69461266962657e-11, 9.418824879859865e-11, 1.0203247343839044e-10, 1.1053075607998326e-10,
    1.1973601676355108e-10, 1.2970923243066702e-10, 1.4051176364383143e-10, 1.5221492630744923e-10,
    1.64891508617545e-10, 1.7862614021483814e-10, 1.935025849385566e-10, 2.0961938337172748e-10,
    2.270773891156293e-10, 2.45990766389194e-10, 2.66477808934531e-10, 2.886727447542838e-10,
    3.1271478345639295e-10, 3.387604451052607e-10, 3.669742135323994e-10, 3.9753898634000476e-10,
    4.3064838525137714e-10, 4.665162569718946e-10, 5.053705374546626e-10, 5.474620735898848e-10,
    5.930579016577321e-10, 6.424525556459915e-10, 6.959597139857372e-10, 7.539249316612978e-10,
    8.16716454549902e-10, 8.847390165458027e-10, 9.584257081439249e-10, 1.038251145646256e-09,
    1.1247231681198893e-09, 1.218398615601941e-09, 1.3198748519704532e-09, 1.4298040472710282e-09,
    1.548887730003609e-09, 1.6778905894823138e-09, 1.8176364605579888e-09, 1.9690228867098462e-09,
    2.1330163605203054e-09, 2.310669461011418e-09, 2.5031179892432438e-09, 2.71159583178464e-09,
    2.9374359261497303e-09, 3.1820868514113674e-09, 3.4471130080169934e-09, 3.7342137722598604e-09,
    4.045225088636087e-09, 4.382140601685907e-09, 4.7471149669617e-09, 5.142488979515874e-09,
    5.570791082797053e-09, 6.034766715902309e-09, 6.537384636018551e-09, 7.0818653351393846e-09,
    7.671691884840334e-09, 8.31064431785694e-09, 9.00281329209824e-09, 9.752632103485282e-09,
    1.0564899709518645e-08, 1.1444820113020142e-08, 1.2398025010912919e-08, 1.3430620553256501e-08,
    1.4549216820318821e-08, 1.5760979498428323e-08, 1.707366419870977e-08, 1.8495680260199587e-08,
    2.0036130627625235e-08, 2.1704882059140198e-08, 2.3512617030166315e-08, 2.5470914695128053e-08,
    2.759231146110384e-08, 2.9890395335432666e-08, 3.237987827194581e-08, 3.5076704089260195e-08,
    3.79981391837312e-08, 4.116289327898138e-08, 4.459122900559585e-08, 4.830510270525123e-08,
    5.232829208743236e-08, 5.6686562912114634e-08, 6.140781978074768e-08, 6.652229792873054e-08,
    7.206274444920739e-08, 7.80646398388487e-08, 8.456641334622071e-08, 9.16097029753804e-08,
    9.923960675860859e-08, 1.0750498306995465e-07, 1.1645875575734342e-07, 1.2615826515597878e-07,
    1.3666561813976356e-07, 1.4804809668579677e-07, 1.6037858580885623e-07, 1.737360497161179e-07,
    1.8820601688031786e-07, 2.0388114357542398e-07, 2.2086180407775285e-07, 2.3925673795747843e-07,
    2.5918372998152806e-07, 2.8077038349347034e-07, 3.0415492461188845e-07, 3.2948709696132715e-07,
    3.569291102979728e-07, 3.866566904495517e-07, 4.188601917459172e-07, 4.5374582912026773e-07,
    4.915369874289756e-07, 5.32475662750387e-07, 5.76823999001804e-07, 6.248659791414689e-07,
    6.769092328954478e-07, 7.332870186318566e-07, 7.943603440714785e-07, 8.605202890754401e-07,
    9.321904993701929e-07, 1.0098299132844053e-06, 1.0939356845318332e-06, 1.1850463810183015e-06,
    1.2837454182180431e-06, 1.3906648106078058e-06, 1.5064892040949243e-06, 1.6319602731130312e-06,
    1.7678814580829566e-06, 1.915123121696651e-06, 2.0746281095549915e-06, 2.247417801990114e-06,
    2.4345986394815422e-06, 2.6373692221268956e-06, 2.8570279701884127e-06, 3.094981452677179e-06,
    3.3527533806895164e-06, 3.631994379119377e-06, 3.934492540094171e-06, 4.262184887289774e-06,
    4.617169766514479e-06, 5.001720297273447e-06, 5.418298912669469e-06, 5.869573141125958e-06,
    6.358432673827893e-06, 6.888007885143011e-06, 7.461689860325865e-06, 8.083152126467855e-06,
    8.75637416000209e-06, 9.485666883562332e-06, 1.0275700255798054e-05, 1.1131533191142314e-05,
    1.2058645938578394e-05, 1.306297518733326e-05, 1.4150952068581499e-05, 1.5329543351136587e-05,
    1.660629603780166e-05, 1.7989385707105052e-05, 1.9487668848659588e-05, 2.1110739589582007e-05,
    2.2868991116014724e-05, 2.4773682239621755e-05, 2.683700947666034e-05, 2.9072185160855495e-05,
    3.1493522031902194e-05, 3.4116524903858426e-05, 3.695798992983354e-05, 4.003611216918015e-05,
    4.33706020807203e-05, 4.698281175316793e-05, 5.0895871612155084e-05, 5.513483854863312e-05,
    5.9726856346953943e-05, 6.470132951065303e-05, 7.009011152997186e-05, 7.592770886465244e-05,
    8.225150187649197e-05, 8.910198419603188e-05, 9.652302198876325e-05, 0.00010456213485013768,
    0.00011327080005692854, 0.00012270478217960994, 0.00013292449011071536, 0.00014399536386894456,
    0.0001559882935620627, 0.00016898007325923077, 0.00018305389262699779, 0.00019829986953349578,
    0.00021481562693386778, 0.00023270691781075953, 0.00025208830209576353, 0.000273083879950891,
    0.0002958280860127452, 0.00032046654974705554, 0.00034715702731437695, 0.00037607041094903787,
    0.0004073918221945392, 0.00044132179601261276, 0.0004780775631932076, 0.0005178944392575978,
    0.0005610273285492501, 0.0006077523530626711, 0.0006583686161610974, 0.0007132001123056777,
    0.0007725977946211471, 0.0008369418132054328, 0.0009066439379169216, 0.0009821501805706801,
    0.0010639436324113758, 0.0011525475340417061, 0.0012485285960246407, 0.0013525005897713227,
    0.001465128229427033, 0.0015871313668990702, 0.0017192895232545067, 0.0018624467810684103,
    0.0020175170632237985, 0.002185489824752761, 0.0023674361848028598, 0.0025645155262914994,
    0.002777982590437167, 0.00300919509264187, 0.0032596218842012715, 0.0035308516814437155,
    0.0038246023790330713, 0.004142730957510322, 0.004487243985362342, 0.004860308702838691,
    0.005264264656647495, 0.005701635830905941, 0.0061751431878803945, 0.0066877174906584055,
    0.007242512225494661, 0.007842916371395314, 0.00849256667342533, 0.009195358959419937,
    0.009955457889544543, 0.01077730433644425, 0.01166561934884974, 0.012625403340509645,
    0.01366192875148766, 0.01478072392988092, 0.015987545352380172, 0.0172883345110055,
    0.01868915480206817, 0.0201961025172286, 0.021815184501388224, 0.023552153147416047,
    0.02541228707424238, 0.027400103010434863, 0.029518981007275593, 0.03177068107297044,
    0.03415472461838607, 0.03666760875634583, 0.03930181561936232, 0.04204457273929787,
    0.044876314715174025, 0.047768791845812064, 0.05068276971309018, 0.05356526739479608,
    0.05634629493967875, 0.05893507874181049, 0.061215814923970324, 0.06304307767014752,
    0.06423714789084019, 0.06457973912172932, 0.06381090881908437, 0.06162838374278525,
    0.057691127630854155, 0.05162976229941925, 0.043067394415102045, 0.03165538140677812,
    0.017129503488166286, -0.0006074699929258931, -0.02137242628714528, -0.04455764375646004,
    -0.06895996993248266, -0.09260462344117228, -0.1126271980997651, -0.1252849050781391,
    -0.12616359029272795, -0.11086027009856649, -0.07640696851727531, -0.022919252908735057,
    0.044507563532909335, 0.11267808821090965, 0.16017170558774274, 0.16495736661239888,
    0.11085757151922968, -0.003590330089579761, -0.13550164332179235, -0.19947788001925368,
    -0.14277891769079692, 0.02104315475696535, 0.21025490985275197, 0.2117753709795797,
    -0.08352556594115065, -0.2781450909343181, -0.009980933667065355, 0.23991162016219508,
    0.01313739884558294, -0.17441253335511112, 0.02286439149237859, 0.10534871978222744,
    -0.048248822143892874, -0.044072685491604986, 0.04638684802902458, 0.0037135793950607127,
    -0.02726017309108586, 0.01151509693861285, 0.008359736157359042, -0.010093777367536059,
    0.001128767435056059, 0.004158796504943376, -0.0026485219008939073, -0.0004480586981037112,
    0.0013268597548271666, -0.0004886207980986488, -0.00026088779552154584, 0.0003051941573033775,
    -5.770887590326051e-05, -7.303005472987223e-05, 5.255119253655319e-05, -2.550391715757427e-06,
    -1.3805125154566433e-05, 6.905730036584277e-06, 5.02894175020927e-07, -1.9137682327706168e-06,
    7.024252145629974e-07, 1.288985833239867e-07, -2.0151811960914234e-07, 5.607760359512347e-08,
    1.601133211948644e-08, -1.6433605673349794e-08, 3.571279556091434e-09, 1.3371427621173399e-09,
    -1.0505246814694547e-09, 1.849744503620761e-10, 8.119246705058868e-11, -5.3050593286896325e-11,
    7.953158564581348e-12, 3.690270756409031e-12, -2.1236508328048475e-12, 2.8650322821619125e-13,
    1.2865763912475643e-13, -6.922133428850619e-14, 1.0261575142114782e-14, 1.8766827351411657e-15,
    -1.3292568519074628e-16, -1.413222322116381e-15, 1.424102331544313e-15, -1.5250248931457779e-15,
    1.4066041041122117e-15, -1.551957454706261e-15, 1.4153431125096027e-15, -1.2135593437974455e-15,
    1.499310923011103e-15, -1.4561259893136665e-15, 1.2109880848288861e-15, -1.473911902873381e-15,
    1.2507316452467127e-15, -1.2849392597394791e-15, 1.5193081083911726e-15,
])

WEIGHTS_J1 = np.array([
    -1.7455123988038548e-16, 1.0569918503894337e-16, -1.4712287062007687e-17, 4.457196363753368e-16,
    6.439083166458193e-18, 3.677768174551798e-17, -1.800948106296639e-16, 1.5909509567440067e-16,
    -2.0331814864988725e-16, -1.2324136036169318e-16, 9.810846222708111e-17, 1.5787667680472764e-17,
    -1.5512274559768812e-16, 2.750145325436245e-16, -4.185983199726128e-17, -5.564362685077545e-17,
    -3.8451992845549106e-16, 4.597743982846907e-16, 9.872807895381357e-17, 1.8902989672027763e-16,
    -3.927138751612548e-16, 1.8958452449264235e-16, -8.271592652638354e-17, -4.7631273907647555e-17,
    -7.034837536663262e-17, 1.9826043126839287e-16, -1.5637015389805162e-17, 1.574808114613784e-16,
    -2.856766035729729e-17, 4.0621051503650887e-17, -2.601968244678524e-16, 1.2255913811220852e-16,
    -1.9158985326199053e-16, 2.7987457608764687e-16, -4.832572607320473e-17, 2.817934434485705e-17,
    -4.0350159941120366e-17, 2.9377015496240596e-16, 6.332460730603358e-17, 3.7640856064511283e-17,
    -1.1132212082559189e-16, 2.569249768061826e-16, -2.7341614506454486e-16, 3.5227809502286836e-16,
    2.6194495831789056e-17, 2.853743984643078e-16, 1.0801259121792793e-16, 2.972301643046024e-16,
    1.5211444507805028e-16, -2.285292686374746e-16, -2.1622749911183689e-16, -2.5604871518282066e-17,
    -2.836080869039167e-16, 3.372523381720036e-17, -4.818228878593441e-16, 2.548734137773962e-16,
    3.484488586906729e-16, 4.2607034573306914e-16, 4.668778872796884e-16, -4.7701116003313913e-17,
    -5.1147759794374e-16, 1.1875679896756584e-17, 1.7369595461219207e-16, 7.326388382464084e-18,
    -8.536957242162837e-16, 2.9332960836483407e-16, 6.784394307527931e-16, -2.1299496728706515e-16,
    -1.2156026672707826e-15, 6.389961611490082e-16, 6.681698386526434e-16, -2.9209275834298473e-16,
    -7.864405038487057e-16, 3.174415134178009e-16, -3.422955069143606e-17, 3.7062652810193716e-16,
    -2.81133631927127e-17, 1.8884802255392225e-17, -3.2547533881498564e-16, 3.6069055171941296e-16,
    -1.865054759576291e-16, 7.57552061636328e-17, -4.4177312657984987e-16, 2.247282236638449e-16,
    -1.965316452749985e-16, 2.3329456807858945e-16, -2.9052271320908896e-16, 1.5156718329570102e-16,
    -1.0702656232314967e-16, 3.0270142324853134e-16, -1.263744513212562e-16, -1.012178267180731e-16,
    -3.0497873284101265e-16, 1.219125487046142e-16, 1.5292520007863928e-16, 2.9160867906796425e-16,
    -4.007985506944906e-16, 2.4714076354444545e-16, -5.804158553594041e-17, 4.477191737294021e-16,
    -3.6952958335896854e-16, 3.081079736418121e-16, -1.984678545274959e-16, 1.8248527390771213e-16,
    -3.063658684717426e-16, 1.8361902703124114e-16, -2.60145284107261e-16, 9.207198487799799e-17,
    -8.915716664453002e-18, 1.7588944506206697e-16, -3.851291217131899e-16, 2.660677126358266e-16,
    -1.4431188804088248e-16, 2.684172801098651e-16, -1.3082602213931137e-16, 1.5564834080032863e-16,
    -1.539639017336452e-16, 1.6115328054487004e-16, -1.8652498558564956e-16, 2.9299052477467875e-16,
    -2.1980318038069637e-16, 1.979749479276912e-17, -4.359613928119266e-16, 1.702030301872325e-16,
    -8.651213992823154e-17, 1.4645883147332438e-16, -2.027474623722033e-16, 2.5696231363990664e-16,
    -5.415048782932518e-17, 1.139561578730386e-16, -2.7388176622549286e-16, 2.1778775707744704e-16,
    1.3372367103734068e-17, 3.352895121356729e-16, -2.674207684298818e-16, 2.0178913952186096e-16,
    -6.863532433580422e-17, 2.850402165468641e-16, -3.723205763883918e-16, -1.4449505637825087e-17,
    -1.5177976166933902e-16, 4.082070326582105e-16, 4.883970177710052e-16, 5.803358755908029e-16,
    -2.122287749083559e-16, -1.3454956783878136e-16, -3.4765311607383426e-16, 6.516846451504576e-16,
    6.057986039928276e-16, 6.857087461935855e-16, 2.6476503244845106e-16, 6.620008921156247e-16,
    3.058205910849466e-16, 9.896825552430306e-16, 9.204812467842228e-16, 1.5312689663100993e-15,
    9.775208851219255e-16, 2.1330747507546923e-15, 1.7546980579720956e-15, 2.38812695425753e-15,
    2.199265968423961e-15, 3.256673506542759e-15, 3.413853984051062e-15, 4.174154994336029e-15,
    4.636658928704166e-15, 5.894721977246018e-15, 6.052970523306563e-15, 7.75462680975614e-15,
    9.053878953813509e-15, 1.1070728131545862e-14, 1.2149207318958727e-14, 1.4707671271672848e-14,
    1.686321356457619e-14, 2.0219208613760276e-14, 2.291915710067277e-14, 2.7904433626398186e-14,
    3.224342437861841e-14, 3.870037842905188e-14, 4.457971753374077e-14, 5.213969670924355e-14,
    6.085157475260429e-14, 7.323182127703255e-14, 8.509700671947548e-14, 9.871966977568359e-14,
    1.1601919161404223e-13, 1.3868884466548376e-13, 1.6096421154261565e-13, 1.8740054770957894e-13,
    2.208842597517999e-13, 2.612468953720682e-13, 3.0484957153261686e-13, 3.5725852103877623e-13,
    4.1912083353837624e-13, 4.927877571159328e-13, 5.78104711132516e-13, 6.789050097453356e-13,
    7.957759843635456e-13, 9.34493853359198e-13, 1.096558579464535e-12, 1.2874707629824133e-12,
    1.5100067650016443e-12, 1.7720485920414248e-12, 2.0792635428844044e-12, 2.4409806466676313e-12,
    2.8638109615882723e-12, 3.3606701764617996e-12, 3.942876270511381e-12, 4.628194024735123e-12,
    5.430999870332092e-12, 6.3739831241606565e-12, 7.479147052132606e-12, 8.77748099689023e-12,
    1.0299675898414141e-11, 1.2087271114708234e-11, 1.4184007368113712e-11, 1.664574560203076e-11,
    1.953341004886296e-11, 2.2923568150823852e-11, 2.6900564778504402e-11, 3.1568600725270216e-11,
    3.704513678115893e-11, 4.3473516225095736e-11, 5.1016073811644296e-11, 5.986865807147764e-11,
    7.02557646802233e-11, 8.244609736415192e-11, 9.675067976437382e-11, 1.135392441686576e-10,
    1.3323896641957698e-10, 1.563576623653088e-10, 1.8348643878496488e-10, 2.1532447551875675e-10,
    2.526852907657371e-10, 2.9652994467274194e-10, 3.479800447538845e-10, 4.0835879000212013e-10,
    4.792125588465985e-10, 5.623620592586183e-10, 6.599374634727451e-10, 7.744442165128497e-10,
    9.088177265005815e-10, 1.0665083353827904e-09, 1.2515587602656501e-09, 1.468718702189239e-09,
    1.723556599461142e-09, 2.0226127266520715e-09, 2.373557020169978e-09, 2.78539628752336e-09,
    3.2686924673809194e-09, 3.8358462840036134e-09, 4.5014058787293885e-09, 5.282450231656378e-09,
    6.199012563594072e-09, 7.274609133662609e-09, 8.536831272450991e-09, 1.0018065369180726e-08,
    1.17563080144952e-08, 1.3796156313814997e-08, 1.6189938143100497e-08, 1.8999068623634124e-08,
    2.2295612382005637e-08, 2.6164144694732064e-08, 3.070390729678468e-08, 3.603136891183866e-08,
    4.228320052688234e-08, 4.9619795469949114e-08, 5.822936807157716e-08, 6.833279509300524e-08,
    8.018927209303257e-08, 9.410297989682474e-08, 1.10430865399487e-07, 1.2959181375064136e-07,
    1.5207738858351385e-07, 1.784644560578148e-07, 2.0942995934593837e-07, 2.4576830597017275e-07,
    2.8841173855508026e-07, 3.384542594968655e-07, 3.9717967904071593e-07, 4.660945713492496e-07,
    5.469669070710024e-07, 6.418714222944545e-07, 7.532428286741711e-07, 8.839382882617442e-07,
    1.037310692146062e-06, 1.217294690268143e-06, 1.4285076079918804e-06, 1.6763679100648455e-06,
    1.9672341767963337e-06, 2.3085682311015447e-06, 2.7091265232851683e-06, 3.1791847572830133e-06,
    3.730801440872117e-06, 4.378127192820839e-06, 5.137767656884642e-06, 6.029209402422755e-06,
    7.075319644850759e-06, 8.30293266666113e-06, 9.743537877150585e-06, 1.1434087211323445e-05,
    1.3417942447404162e-05, 1.5745986762658345e-05, 1.8477928866828532e-05, 2.1683833129175768e-05,
    2.544591469219513e-05, 2.986064547066499e-05, 3.504122464089472e-05, 4.112047663323867e-05,
    4.825425025125414e-05, 5.662540534428755e-05, 6.644848801903985e-05, 7.797521277614994e-05,
    9.150088984974925e-05, 0.0001073719596122528, 0.0001259948229335998, 0.00014784618821370925,
    0.00017348519227641102, 0.00020356759496150325, 0.0002388623960082702, 0.0002802712793647288,
    0.00032885135438044097, 0.0003858417371106912, 0.00045269459812361754, 0.0005311113971715358,
    0.0006230851292898689, 0.0007309495219667414, 0.0008574362470294281, 0.0010057413424431928,
    0.0011796021732504186, 0.001383386391533778, 0.0016221944709446906, 0.0019019774768511883,
    0.0022296717637434868, 0.0026133522337039674, 0.003062405593172485, 0.0035877246414142646,
    0.004201923914772352, 0.004919575862620658, 0.005757464958641044, 0.0067348545056989655,
    0.007873757037077687, 0.0091991937059121, 0.010739420301861091, 0.012526086785222884,
    0.014594282527479274, 0.016982399619008614, 0.019731720254319584, 0.022885599773613718,
    0.026488072842499478, 0.030581655189958742, 0.035204046858820906, 0.04038336650029928,
    0.04613146486334998, 0.05243479057184672, 0.059242234600246524, 0.06644940003243209,
    0.07387889186027448, 0.08125659968118415, 0.08818471704485946, 0.09411356936216024,
    0.09831640829942445, 0.09987481546176995, 0.0976873932773995, 0.0905188818900309,
    0.0771131584801113, 0.056407328928857095, 0.02787513375638995, -0.008016337253079835,
    -0.049215118558728385, -0.09137022371198171, -0.12750316762054256, -0.14850362308036577,
    -0.14397316498858956, -0.10505122132264112, -0.03173608877414317, 0.06216265763263029,
    0.1504343802239387, 0.1904127248853067, 0.13584010863024568, -0.00478485471398408,
    -0.15172489831322983, -0.2140612392317575, -0.10386608687384602, 0.16167194014956465,
    0.2624589073183271, -0.032816649513579106, -0.26653478447003887, -0.014346409629791477,
    0.20922520156330485, -0.007885383584781028, -0.13961493061644914, 0.041165125271595854,
    0.07204098081554366, -0.05161001780242117, -0.01977721827380059, 0.03801852486214459,
    -0.007319097713674799, -0.01673668439879799, 0.012280802485478698, 0.002151062144277818,
    -0.007096070649694907, 0.0026491389590202995, 0.001843446737421666, -0.002090787665186959,
    0.0002947662282423615, 0.0006827174133589296, -0.0004511405036311642, -2.6070573995857043e-05,
    0.00016869231117465022, -7.204258296864317e-05, -1.9065878049578468e-05, 3.041674012308668e-05,
    -8.473669552616579e-06, -4.4363279479076916e-06, 4.151308414461935e-06, -7.19167282620602e-07,
    -6.611069440584603e-07, 4.3795312353477655e-07, -4.1684978891020796e-08, -7.089736365995403e-08,
    3.624984663098734e-08, -1.3688089191445314e-09, -5.712250284424478e-09, 2.3818951389502607e-09,
    4.256410855599194e-12, -3.5303731453360805e-10, 1.2539788338118639e-10, 3.1049870345006653e-12,
    -1.6922257599793834e-11, 5.3241749165576835e-12, 1.7187425671693229e-13, -6.315202720292438e-13,
    1.819588265365986e-13, 5.759420959793316e-15, -1.9382107785609045e-14, 5.75492449202587e-15,
    -5.053151114770278e-16, 4.184538042094983e-16, -5.814109865903069e-16, 6.280028686184082e-16,
    -5.972823547810433e-16, 5.440543089107259e-16, -7.992418827015195e-16, 4.538007205840117e-16,
    -3.7975498491140476e-16, 7.305302022759503e-16, -3.7259787409743655e-16, 2.762406301613078e-16,
    -5.85105068329715e-16, 3.0158567527922025e-16, -4.889309064528872e-16,
])
