// Reference values of the polygamma function at real and complex arguments,
// tabulated at 50 significant digits (truncated to double on parse).
#pragma once

namespace qprobe::testdata {

struct PolygammaRealRef { int order; double z; double value; };
struct PolygammaComplexRef { int order; double re, im; double value_re, value_im; };

inline constexpr PolygammaRealRef kPolygammaReal[] = {
    {0, 0.25, -4.2274535333762654080895301460966835773672444387082},
    {0, 0.5, -1.9635100260214234794409763329987555671931596046604},
    {0, 1, -0.57721566490153286060651209008240243104215933593992},
    {0, 1.5, 0.036489973978576520559023667001244432806840395339566},
    {0, 2, 0.42278433509846713939348790991759756895784066406008},
    {0, 3.7, 1.1671535393615113858738639661450468811737487878769},
    {0, 7.25, 1.9104535268837360283824945612221413885165449744929},
    {0, 14.9, 2.6674289762160423139576111068507615322575058198729},
    {0, 15, 2.6743466616607937017200502364799241312844029906224},
    {0, 40, 3.6763273740348431259101386395532159646304447263273},
    {0, 250, 5.5194595845310464169658149258917484653358018915723},
    {1, 0.25, 17.197329154507110739271319119335224021506894401494},
    {1, 0.5, 4.9348022005446793094172454999380755676568497036204},
    {1, 1, 1.6449340668482264364724151666460251892189499012068},
    {1, 1.5, 0.9348022005446793094172454999380755676568497036204},
    {1, 2, 0.6449340668482264364724151666460251892189499012068},
    {1, 3.7, 0.31003785767003831910385929811999707838408779774345},
    {1, 7.25, 0.14787923315893216965213705608050908168352206484503},
    {1, 14.9, 0.069416583207095789081673274538618622747022109679047},
    {1, 15, 0.068938227847683806226155216756371669861800840428034},
    {1, 40, 0.025315103841291028157597100127414793046172995386029},
    {1, 250, 0.0040080106666325337234198336129714133579627816333821},
    {2, 0.25, -129.32773993753692033333796717884398988728980950284},
    {2, 0.5, -16.828796644234319995596334261160299870709808092767},
    {2, 1, -2.404113806319188570799476323022899981529972584681},
    {2, 1.5, -0.82879664423431999559633426116029987070980809276698},
    {2, 2, -0.404113806319188570799476323022899981529972584681},
    {2, 3.7, -0.095395308728554043835189850201047385531653208894139},
    {2, 7.25, -0.021828952295197739222229687080749026633069199625673},
    {2, 14.9, -0.0048167329328290492953722801908110694722089986960996},
    {2, 15, -0.0047506027165515547467791223768191188366255465818826},
    {2, 40, -0.00064082027183529858775637104361557181126174292913784},
    {2, 250, -0.000016064127999317344255685441180130128010329264232677},
    {3, 0.25, 1538.7821440091883960227912438290350567684018466457},
    {3, 0.5, 97.409091034002437236440332688705111249727585672686},
    {3, 1, 6.4939394022668291490960221792470074166485057115124},
    {3, 1.5, 1.4090910340024372364403326887051112497275856726854},
    {3, 2, 0.49393940226682914909602217924700741664850571151236},
    {3, 3.7, 0.058279217956563623540371673418922942801430149105764},
    {3, 7.25, 0.0064330375979401566587061392180363126880380369503068},
    {3, 14.9, 0.00066818766462068243100185738352278309445167162624613},
    {3, 15, 0.00065447977828273734841733708901750529780062713301067},
    {3, 40, 0.000032441400151563500321880750353614362199387933464168},
    {3, 250, 0.00000012877004798361634951275109237251443640799000682163},
    {4, 0.25, -24584.375388637933733558227152521958995763519530874},
    {4, 0.5, -771.47424982666722519053592192403342103446820410942},
    {4, 1, -24.886266123440878231952771674968820033369942068046},
    {4, 1.5, -3.4742498266672251905359219240334210344682041094231},
    {4, 2, -0.88626612344087823195277167496882003336994206804591},
    {4, 3.7, -0.053038611107953970678940236247362074609566560112878},
    {4, 7.25, -0.0028387579634221853594079607895410800024199656432478},
    {4, 14.9, -0.00013898332330782631540069914333138565333599236121279},
    {4, 15, -0.00013519619187519276575068431301221387701470711172015},
    {4, 40, -0.0000024633778392772126782675972044044486392518600395196},
    {4, 250, -0.000000001548328959541260582358386765641784657843936384661},
    {5, 0.25, 491552.5137676812920458639871995438557589625580448},
    {5, 0.5, 7691.1135486024354962417555492193591909377402246484},
    {5, 1, 122.08116743813389676574215157491046334821809880394},
    {5, 1.5, 11.113548602435496241755549219359190937740224648373},
    {5, 2, 2.0811674381338967657421515749104633482180988039424},
    {5, 3.7, 0.063939753902039804442916844948351881148165095248662},
    {5, 7.25, 0.0016673575192282559939507805275316060515523702022949},
    {5, 14.9, 0.000038529499965244758598777421596715669207549518784587},
    {5, 15, 0.000037222150949619508661464918616558828168738151266921},
    {5, 40, 0.00000024938943509996702254122949478592453390936797488123},
    {5, 250, 0.000000000024822743025320439289906843876202594214478515894758},
    {6, 0.25, -11796633.687743691606106520703805612260562765726374},
    {6, 0.5, -92203.457923803023286231087958265415697811523978086},
    {6, 1, -726.01147971498443532465423589185366691190176360697},
    {6, 1.5, -43.457923803023286231087958265415697811523978085427},
    {6, 2, -6.0114797149844353246542358918536669119017636069719},
    {6, 3.7, -0.09576004675283736745711646704784746626674871630607},
    {6, 7.25, -0.0012220841223540664785128090351477708748084139235676},
    {6, 14.9, -0.000013346348522340626776051629145671146074849482252111},
    {6, 15, -0.000012804988754626054088786691545321960970201748694555},
    {6, 40, -0.000000031558179552363939191254594505152156325208516462079},
    {6, 250, -0.0000000000004974457645915398405433315122050073208819540935415},
    {7, 0.25, 330302293.70901344777767858061385422563358979052886},
    {7, 0.5, 1290440.2181855980649694862685313201483508164081432},
    {7, 1, 5060.5498752376394704685736020836084249051623848752},
    {7, 1.5, 200.21818559806496948626853132014835081640814318725},
    {7, 2, 20.549875237639470468573602083608424905162384875244},
    {7, 3.7, 0.17110607134145699856247985365896455345578158246914},
    {7, 7.25, 0.0010730756065806685263635170572773162396794113977758},
    {7, 14.9, 0.0000055455159096962916913093597083332549924855304401239},
    {7, 15, 0.0000052840831298028197245674842242010853998393053214927},
    {7, 40, 0.0000000047918581244276833593414118206301734999158851877216},
    {7, 250, 0.000000000000011962511502701770767026542497725395166113581697089},
};

inline constexpr PolygammaComplexRef kPolygammaComplex[] = {
    {0, 1.0714285714285714, 0.0714285714285714, -0.46040877168028934693109419330000493021339248372399, 0.10601169851345155079428892961867709309828467200527},
    {0, 1.0714285714285714, -1.7857142857142857, 0.61877912022100072871099656840559666278090564892138, -1.2535650085906376485803917234334013962224280410766},
    {0, 2, 3, 1.2079807107101508807866400955803914551460705609388, 1.1041296805875762096619788786172571999050537973016},
    {0, 1.1, 12.5, 2.5266141959107070635065270050441437188937378566755, 1.5228076005018800030070765233409574103258925498339},
    {0, 3.5, -0.25, 1.1065269968998089432707980028756207642369087838146, -0.082407056124642272001101596016798586331161003333125},
    {0, 1.02, 0.4, -0.3834325676691408134565464172134156965690463704434, 0.58307977674730984768452221830849642295649264566507},
    {0, 1.5, 40, 3.6891658607775263789767149761247315113762281081766, 1.5458002324346404092641290654875877176805250215123},
    {1, 1.0714285714285714, 0.0714285714285714, 1.4757495981046332107062069718717218839381182616479, -0.14157505296710383545486028689929633378007135608896},
    {1, 1.0714285714285714, -1.7857142857142857, 0.17413011595034961169141420616824094766416210292075, 0.51528004707887733957119903814408465192463249015018},
    {1, 2, 3, 0.13555542700569092129228539920666246677820163547092, -0.26700999245834564113967090228247290150965862317931},
    {1, 1.1, 12.5, 0.0038372927496214070524314921733101637417129918465219, -0.079858276685259148553334301302072925113877497681997},
    {1, 3.5, -0.25, 0.3281747781116502850532813612781814446276374733916, 0.026875059018186130916499800537954993753219314748731},
    {1, 1.02, 0.4, 1.211794037659329705065353248739017438499660279076, -0.71548710053930961756517731384662591886466170487827},
    {1, 1.5, 40, 0.0006247071075272593640839931836732372775783622896565, -0.024985682249973298530471050831334392264891796957067},
    {2, 1.0714285714285714, 0.0714285714285714, -1.9522503525065444397664327341144215083976309851909, 0.35145271992525290359382761988386104865047096238741},
    {2, 1.0714285714285714, -1.7857142857142857, 0.23593394474506102419541221504379335260997411772519, -0.18766313777412323101673325732876913680388827928162},
    {2, 2, 3, 0.052676189080935860357557185149441361652622449733592, 0.073036229334405806924544500476707333188320314840414},
    {2, 1.1, 12.5, 0.0063659751421986933593921799105274035832579128828175, 0.00061353305314815336299417376253648002052645350503828},
    {2, 3.5, -0.25, -0.10610150195031017309419944244032265904060538404652, -0.017351888294255719361500278509728332191252610315797},
    {2, 1.02, 0.4, -0.99326003368019020329595736578023560297002801799427, 1.5407665390489888792013278029887606803572145367432},
    {2, 1.5, 40, 0.00062392642702985069368115969817969419053839928385751, 0.000031220714565754774765851371400337769458783696293997},
    {3, 1.0714285714285714, 0.0714285714285714, 4.7850467716818223087316961801330117494259708438766, -1.2408993792147094841382538259632161746562346203583},
    {3, 1.0714285714285714, -1.7857142857142857, -0.29330467475034654058920552129123626851488990079338, -0.17110872661945951380764073368323963683449217665059},
    {3, 2, 3, -0.053831962091599721160407656783199854881278194520047, 0.0076890935247364805218309372269839491259786403850881},
    {3, 1.1, 12.5, -0.00014710891904580507131755302205196003011436167244839, 0.0010131075195286593005617755420162286323464506299103},
    {3, 3.5, -0.25, 0.067627757733431555607380281383423494729206216135911, 0.016643334611063987232432090632639851265003749953323},
    {3, 1.02, 0.4, 0.65365716184352086805839213294188172450634764919146, -4.4361628584863429668823463987588495248170258502109},
    {3, 1.5, 40, -0.0000023400898925902763688800937566265527290347841728607, 0.000031142674983204061684853230871355024905264428949364},
    {4, 1.0714285714285714, 0.0714285714285714, -16.627673064749254090168264702740255243970690472732, 5.6129386621238834990546880069817615713945379407234},
    {4, 1.0714285714285714, -1.7857142857142857, -0.074657729673917740945270856986544810752855947512657, 0.57506637091243338797903463203152152561860052330654},
    {4, 2, 3, 0.016871168502127085500652659074665100919689837497764, -0.046470829225114953821591376139538117202122417731652},
    {4, 1.1, 12.5, -0.00024140082345038860234417072241988378452966241816291, -0.000047019151009547102996263940217292516658285844197476},
    {4, 3.5, -0.25, -0.063764771663308958899265525274884438261762324441432, -0.021090994507711633838579970979159192408093873622787},
    {4, 1.02, 0.4, 3.9938424930699223021709174871458928677585518480715, 15.141151172084797135623745439204160383694096954035},
    {4, 1.5, 40, -0.0000023303392140564130311458182025158454189529438086755, -0.00000023382608394927738844018968618431097627603598174502},
    {5, 1.0714285714285714, 0.0714285714285714, 73.774386621334434995230162677565280727495381946221, -30.773464750449195147200154185040952069929474375593},
    {5, 1.0714285714285714, -1.7857142857142857, 1.2666998001889072949437787444744972717720872932484, -0.39094267914994514981308463319477147673213358990351},
    {5, 2, 3, 0.039864175902363098725001485562185665232976559900644, 0.045010414502956550886379110651506385650866089775386},
    {5, 1.1, 12.5, 0.000018780867831228841723933086936764469276966066458895, -0.000076549564333658201622167807313596521687692555256926},
    {5, 3.5, -0.25, 0.079084952585540502117695084834309343406872714442096, 0.03312079019291998767080676893577770907403291773796},
    {5, 1.02, 0.4, -42.416969088110422440582644310809669126918845991237, -55.88817208398635951109121005371588570079987741165},
    {5, 1.5, 40, 0.000000029200834699519092640821121288044577990763136535412, -0.00000023236422913541831479106832504072363618245867922202},
    {6, 1.0714285714285714, 0.0714285714285714, -395.31940112585885573719294150055582406374791655966, 197.60669026526436781312585055771033626460490745634},
    {6, 1.0714285714285714, -1.7857142857142857, -2.5913411884930629911317562860481600148841137859194, -2.7495138394076187993883541458234509399218828545237},
    {6, 2, 3, -0.08945536079713108155261200264460830333026764118671, 0.019926211739914415618963779284170397723807967902588},
    {6, 1.1, 12.5, 0.000030284050650777243079960254735724666093247008637206, 0.0000089997771421526257297452823449820146016465887534016},
    {6, 3.5, -0.25, -0.12098740347442306399263694923581291281538260163942, -0.061904982718934700782275277229440540814687263663988},
    {6, 1.02, 0.4, 327.51429611890514813603482702227465212552019258646, 195.34677737975582353014802936336041085716445710611},
    {6, 1.5, 40, 0.000000028945159464656300357765857880699470314656315359998, 0.0000000043753276908550806526408046447318032477957982094342},
    {7, 1.0714285714285714, 0.0714285714285714, 2471.2659196770750098380364894110623727959133053263, -1451.7689964494199811723587668975517367596254968882},
    {7, 1.0714285714285714, -1.7857142857142857, -4.2035008765981156906527970907220577041863665018388, 12.111907974324642640761243039123790829508638042204},
    {7, 2, 3, 0.048794547839555824495677146437654835387650852594051, -0.16071742420379879457388629436242931123386640493409},
    {7, 1.1, 12.5, -0.0000050302241001925752731372238391269789360753091661103, 0.000014348051867267529747143999052606379381064896307467},
    {7, 3.5, -0.25, 0.21919715337764810546812710035163460371000310146575, 0.13394584521808739095371817863428092348201952546072},
    {7, 1.02, 0.4, -2398.9061292860915507157043041656629567097129484896, -383.23927464491387564900681851714024841285325428846},
    {7, 1.5, 40, -0.00000000076472329292238292427080987780155447158481191238611, 0.0000000043242262404177779154516644059497723758252158131291},
};

}  // namespace qprobe::testdata
