// Generated by gen_airy_reference.py (mpmath, 40 digits). Do not edit.
// (r, theta, [ai, aip, bi, bip, ai_int, bi_int] as (re, im))
pub const AIRY_REFERENCE: &[(f64, f64, [(f64, f64); 6])] = &[
    (0.0, 0.0, [(3.550280538878172392600632e-1, 0.0), (-2.588194037928067984051836e-1, 0.0), (6.149266274460007351509224e-1, 0.0), (4.482883573538263579148237e-1, 0.0), (3.333333333333333333333333e-1, 0.0), (0.0, 0.0)]),
    (5.0e-1, 0.0, [(2.316936064808334897691253e-1, 0.0), (-2.24910532664683893135997e-1, 0.0), (8.542770431031554933000488e-1, 0.0), (5.44572564140592301827164e-1, 0.0), (1.873800284214761550044381e-1, 0.0), (3.653384655095201104281601e-1, 0.0)]),
    (1.0, 0.0, [(1.352924163128814155241474e-1, 0.0), (-1.591474412967932127875003e-1, 0.0), (1.207423594952871259436379, 0.0), (9.324359333927756329594515e-1, 0.0), (9.7015991416223553731437e-2, 0.0), (8.727691167380081219617866e-1, 0.0)]),
    (2.0, 0.0, [(3.492413042327437913532208e-2, 0.0), (-5.309038443365363170399919e-2, 0.0), (3.298094999978214710280604, 0.0), (4.100682049932889889382034, 0.0), (2.080057755265364168114091e-2, 0.0), (2.873408259982545013297644, 0.0)]),
    (1.899999999999999911182158, 5.999999999999999777955395e-1, [(6.024320950767371772272257e-3, -7.89742748609994533634582e-2), (-3.653981794947436926132273e-2, 1.098618491257096417919486e-1), (6.320894115824152166360828e-1, 1.341321492666234699498504), (-1.1521925445335159942681e-1, 1.880960765140281601789139), (-5.452381958474870616079496e-3, -4.890541836031864310738407e-2), (8.121606384949996724179733e-1, 1.608351781987611930628199)]),
    (3.0, 0.0, [(6.591139357460719144257448e-3, 0.0), (-1.191297670595131847376323e-2, 0.0), (1.403732896373023203174027e+1, 0.0), (2.292221496638217018510473e+1, 0.0), (3.412957326311560833063276e-3, 0.0), (1.006200303130620056316655e+1, 0.0)]),
    (5.0, 5.235987755982988730771072e-1, [(6.080885608647855791391502e-4, 7.474458340195627419590686e-4), (-9.235257453776280044341498e-4, -1.984299547830977080371531e-3), (3.011230769035722597957193e+1, -6.744798003646162567814901e+1), (1.046503691328976849621634e+2, -1.244594616713354526589109e+2), (3.242723404026683100043973e-4, 2.535694825760268954011967e-4), (3.329355523823826518792182, -3.330121816747658312229894e+1)]),
    (5.0, 1.047197551196597746154214, [(2.777465929379752902317528e-2, -1.864762559613730100969283e-1), (-2.5526398037365451190272e-1, 3.362815896524649049241182e-1), (4.210596329825184534407558e-1, 3.22986349730316790764841e-1), (-2.304329959554954686779313e-1, 5.824567989280976486975987e-1), (-2.560776894058049124632677e-2, -7.936546929071932275218679e-2), (7.936546929071932275218679e-2, 1.07682330682174147373898)]),
    (8.0, 0.0, [(4.692207616099231625649082e-8, 0.0), (-1.341439297906786574291154e-7, 0.0), (1.199586004124459930881654e+6, 0.0), (3.354342312744538876507746e+6, 0.0), (1.609084975913270655393977e-8, 0.0), (4.400652580490417843895067e+5, 0.0)]),
    (1.0e+1, -7.853981633974483096156608e-1, [(3.385208815535304232349662e-5, 3.634508596503610514133534e-5), (-1.428621817421190791250512e-4, -6.644989921539572141564292e-5), (9.217669365804576016480005e+2, -4.206109590128695255436243e+2), (2.160272682307616904668911e+3, -2.353686920209144748131301e+3), (5.738393238650583882636952e-6, 1.445247125441895858108761e-5), (3.228856671404688827658073e+2, -5.029674203829043058573672)]),
    (1.2e+1, 0.0, [(1.393184688875360839049035e-13, 0.0), (-4.854736554985308462993654e-13, 0.0), (3.298072258290741761847681e+11, 0.0), (1.135507502443370742404324e+12, 0.0), (3.953145915043153262957707e-14, 0.0), (9.703761422361343384920374e+10, 0.0)]),
    (1.390000000000000035527137e+1, 2.000000000000000111022302e-1, [(-4.537038952663871746886395e-16, 5.005641322124987657516524e-16), (1.875567494367930993367979e-15, -1.698349967733335330903604e-15), (-4.690109779079411929285132e+13, -4.234842912121870178132465e+13), (-1.572322695588328934516294e+14, -1.739724437312268629628872e+14), (-1.068221533197681916658822e-16, 1.433804296132130968249667e-16), (-1.389526171750890373953819e+13, -1.012671817198808815569992e+13)]),
    (1.409999999999999964472863e+1, -2.000000000000000111022302e-1, [(-1.622684961695741776207443e-16, -2.866073050565918159099872e-16), (7.155239049662981032399645e-16, 1.015487513591708279594583e-15), (-7.427394310289956895506739e+13, 1.051005370862547212650942e+14), (-2.364197465558287343104556e+14, 4.189472579303944035565354e+14), (-3.522650145018601853674671e-17, -7.907874954033143490561694e-17), (-2.291164222663136344436961e+13, 2.613660169861417051815085e+13)]),
    (2.0e+1, 6.283185307179586476925287e-1, [(-2.35101584904793195159118e-17, 7.652034006655598419952966e-17), (2.05425308205125270555467e-16, -2.939146494503252511401701e-16), (-2.555029116152913164779253e+14, -3.63811733396451383606331e+14), (-5.786547002026922290509752e+14, -1.898701180514662628389106e+15), (1.687034169104554885058201e-19, 1.781010115807956366052692e-17), (-8.027829766088083466716549e+13, -5.944704798438304917688855e+13)]),
    (3.0e+1, 0.0, [(3.208217591550495571075287e-49, 0.0), (-1.759876581432725982082105e-48, 0.0), (9.057288512151306951894814e+46, -3.208217591550495571075287e-49), (4.953304512891299042078922e+47, 1.759876581432725982082105e-48), (5.831032693525979853536807e-50, 0.0), (1.661290538498933178571526e+46, 0.0)]),
    (3.0e+1, 1.047197551196597746154214, [(-1.191804239879245454526782e-1, -1.802039258588041549147041e-2), (5.166011107810318884305126e-1, 4.110846452915838316106905e-1), (-1.703857644429250732631827e-1, 3.121223553108238262005434e-2), (-1.71694866170243298760457, 7.12019491856453246273615e-1), (-2.052435110381005297122828e-2, 7.93632620381467933707114e-3), (-7.93632620381467933707114e-3, 1.061573053311430158913685)]),
    (4.0e+1, 5.235987755982988730771072e-1, [(1.807605708844849838169772e-53, -1.273970668832123474009266e-55), (-1.107334689516971901444402e-52, -2.875379188256860254951937e-53), (1.347186545925975662050655e+51, -3.508238000140552489305611e+50), (8.798105024133523842312541e+51, 6.816019478126543530770426e+49), (2.751269915892575545634706e-54, -7.518921897720448062921319e-55), (1.915641733006043224941319e+50, -1.09345426879147080499513e+50)]),
    (4.0e+1, -1.047197551196597746154214, [(8.360118264653930240511476e-2, -7.478712836739081457039758e-2), (-2.220714520486760226338259e-1, 6.737789781409944499517523e-1), (-4.772760818130020133142106e-3, 1.295351060844965520373755e-1), (1.732196994140891414799134, 1.167019423212042358341991), (1.734874093879396367958993e-2, -3.68274921559474448258129e-3), (-3.68274921559474448258129e-3, -9.479537771836181089612302e-1)]),
    (3.0, 3.141592653589793238462643, [(-3.788142936776580743472439e-1, 0.0), (3.145837692165988136507873e-1, 0.0), (-1.982896263749265432206449e-1, 0.0), (-6.75611222685258537668032e-1, 0.0), (1.134796176004656789956159, 4.698127852157559733654604e-43), (1.95442489513706036545703e-1, 0.0)]),
    (5.5, 3.141592653589793238462643, [(1.778154127657497560302015e-2, 0.0), (8.641972177713983907721119e-1, 0.0), (-3.678134539157119910947078e-1, 0.0), (2.51115830736309259887558e-2, 0.0), (1.15485153521428446692786, -4.043051845897236580207169e-44), (-1.617863576703089500530065e-2, 0.0)]),
    (7.0, 2.5, [(4.330388579840883804456776e+3, 6.338586048358422174058061e+2), (-1.905253854500946678473079e+3, -1.129005049795029824198967e+4), (-6.33858602442057417293805e+2, 4.330388566303906829414173e+3), (1.129005053428968351855266e+4, -1.905253860105202582774848e+3), (7.264956712204155109208406e+2, -1.550406688097776670091572e+3), (-1.550406692478151428608894e+3, -7.254956737020515822922695e+2)]),
    (7.0, -2.899999999999999911182158, [(-2.490738265980705510976679, 1.360252646974005501933041e+1), (-3.493007143142516934860422e+1, -1.037782588076475529566939e+1), (1.360667823192694583289051e+1, 2.489447020565196665592735), (-1.037976489737791528605557e+1, 3.491867217895496913234543e+1), (-4.255434129989388410236293, -5.291234284390292748102393e-1), (5.298363200901724558891661e-1, -5.253984190367770522761822)]),
    (1.0, 2.094395102393195492308429, [(5.566528572571797685590007e-1, -2.432725640050500638889041e-1), (-4.435434631839975315002686e-1, -1.641961197930361141405003e-1), (4.776059029377210677696665e-1, 4.213604409442983530348533e-1), (4.398475740136672905379507e-1, -2.843960218872043187127683e-1), (4.514920042918882231342815e-1, -4.363845583690040609808933e-1), (-4.363845583690040609808933e-1, 3.544760128756646694028445e-1)]),
    (4.0, 1.570796326794896619231322, [(-4.636230461888968595888721, 7.411093864660436036722932), (1.657175288731026910902453e+1, -4.261942847512349796162163), (-7.41995859754839615084796, -4.638294885032497919174137), (4.252423897732390539924458, 1.655576668781931319084426e+1), (6.188656833035242017080117e-1, 4.563763986215808543413887), (4.560248231600640871479769, 3.83566750582074173416806e-1)]),
    (6.0, 2.356194490192344928846983, [(-1.549013287500277068385836e+3, -2.457720793853276274403336e+1), (1.348632243240950584506575e+3, 3.48107530453519751857614e+3), (2.457719251784088094771304e+1, -1.549013248474448093116395e+3), (-3.481075408862170013178909e+3, 1.34863224557350908420831e+3), (-2.469398185818255659699346e+2, 6.187245786835463701530608e+2), (6.18724590298872159689088e+2, 2.479398301805684168753023e+2)]),
    (9.5, 1.100000000000000088817842, [(4.790166046385976016301269e-1, -5.810278998980227891607867e-1), (-2.187219501966408950823693, 7.733815299996146783093952e-1), (6.458580239618989072224607e-1, 5.013214043759363819889438e-1), (-6.402309503348972689352351e-1, -2.022888811806289398427264), (4.014861046067309924190057e-2, -2.410460243648557228827788e-1), (-2.19539823595801081408268e-1, 9.545047214745574884735331e-1)]),
    (1.000000000000000055511151e-1, -6.99999999999999955591079e-1, [(3.352046128106297095383258e-1, 1.662325069600991807780708e-2), (-2.584742426756257681076733e-1, -1.67480134021496754182651e-3), (6.491583501187561256203992e-1, -2.896924564559264764616203e-2), (4.487353100868632268772934e-1, -3.158807966600867577255188e-3), (3.064005973917228348221132e-1, 2.159677826686372594866207e-2), (4.741067001816907764977185e-2, -4.182432122637093772875747e-2)]),
    (2.5, 2.0, [(2.046439082074285115635739, -2.393782347185020426841646), (-4.569964570275387142393281, -5.364530841794718657395824e-1), (2.425803268357492788057724, 2.042223055192658623346186), (5.709664519225721784756763e-1, -4.528572249955448711313619), (-2.383602756094110750348686e-1, -2.444167433309764563253492), (-2.436790696512890350100974, 1.222085395776393991724722)]),
    (1.6e+1, 9.000000000000000222044605e-1, [(-6.521454173381062730063124e-6, 1.046648672912358367718498e-5), (4.163624017591989793621062e-5, -2.653330165392863195136628e-5), (-2.727432824627699354661487e+3, -1.723530321589315997367316e+3), (-6.777413392282201195063742e+3, -1.097028068933206279350901e+4), (-3.633392439628473741475798e-7, 3.052520745583595686029488e-6), (-8.041751966804239245176856e+2, -8.129943531603428867466514e+1)]),
    (2.5e+1, -9.49999999999999955591079e-1, [(3.737460438821647404988069e-7, 5.878493231032295623998058e-7), (-3.003504905778570002590187e-6, -1.765675765931237211221383e-6), (3.943745379428289753322389e+4, -2.307931766372055095872854e+4), (1.221654218239983000461495e+5, -1.929914023603435205847281e+5), (1.351066501957996610143963e-8, 1.385283842290994659653899e-7), (9.135178998931493612653329e+3, -4.445288929907033567224782e+2)]),
];
