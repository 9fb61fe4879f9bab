// Reference one-tailed Welch p-values (H1: mean of second sample < mean of
// first) computed with SciPy's ttest_ind(equal_var=False, alternative='greater').
pub const WELCH_CASES: &[(&[f64], &[f64], f64)] = &[
    (&[3.4513145209140017, 2.2187634604109228, 1.6849184898549743], &[4.811376716889495, 6.670780633058674, 6.811443105021308, 8.130141470835337, 7.935412056482441], 0.9991856469007951),
    (&[0.743282072450672, 0.6692978363894523, 2.553085480514355, 0.17175089093882479, 1.094523442759817, 1.4320841564092022, 2.1062557987084176, 0.09933453007018045, 3.910674288933091, -0.5080972149116145, 0.5542946600011558, 2.1041269370316447, 2.53634222235984, 1.6294269023930568, 0.29282531477459295, -1.9138395382519264, -1.9171590680817885, 2.0435092483198933, 0.09720790872770757], &[2.0309967144203416, 2.4512220532324855, 0.7539215001242128, 2.346467768509497, 0.552738972267623, 1.602219044798536, 1.6030529373197568, 1.5784634996807714, 0.07423520535652361, 2.060389457934149, 2.8874684639020836, 1.0646590894544457, 2.1073758193455445, 3.794245414942438, 1.3046634306099387, 3.531398245311812, 1.6423694196488983, -0.43231826052905076], 0.9626919400972268),
    (&[1.9886872805762845, 0.5593360329053891, -2.42817420327483, 0.5631702685706945, -0.1469610007824284, -1.2300780655192691, -0.7529437686309771, -2.177554094809718, 1.4184992806187704, -0.3865462448639613, 1.723023083054208, -0.5943877954336216, 0.42939330737525705, -1.1669785405445943, -1.9630870336994057, 0.9707202233529109, 1.1504709896309673, 2.2411312084510113, -2.46749640785335, -1.088277968649341, -2.1018137750452324, 0.7591466835354412, -2.4360134188917515, 0.817897034257695, -1.6083337148211483, 1.358724272091607, 0.5858844543725201], &[-0.9889564163885937, -2.1061541892012645, 2.018622678299754, -2.2770286067764585, 0.47744769449784186, 2.011169836699424, 0.006813903457494774, -4.070618871273968, -2.8618893013799074, -2.5691250356877178, -3.68824721939289, 1.5547973794369063, 1.5552699640681988, -4.554695519384928, -2.963833257955968, -0.8293474650097625, 0.7299343700471721, 3.244896771438123], 0.16439070378317888),
    (&[3.497697557740315, 2.136827120655345, 0.7103102187761792, 2.1771111444128284, 2.2664682515369434, 0.555494273328347, 2.426583356892066, 3.7420912386085607, 1.7909894259477814, 3.2053070424712256, 2.447200355272015, 1.3901353967538308, 2.6480895537851636, 3.028452434181714, 3.6159306658671855, 1.4123376899647995], &[2.850708123277467, 2.978272032297405, 2.7251539869210637, 3.047833234160485, 2.9298665304073084, 2.929038045797223, 2.8485847522915337, 2.6612745783698135, 2.8592358197021426, 2.904098724325756, 2.8471750207590643, 3.120951204605174, 2.869259064550422, 2.911116215318378, 2.7336405939044606, 3.1573706283657406, 3.211362936955736, 3.267592298085395, 2.9695677478501215, 2.7512681727643953, 2.815229718261366], 0.9872404020554091),
    (&[2.605671686671093, -0.0314098767897768, -0.7661732489010857, 2.1410284012290126], &[-0.2720013746210984, -0.23921564701140818, 0.33850851184216324, 0.40988372858714345, -0.5233537070611606, 0.4634553721550917, 0.0440441407741182, 0.6882467681682884, 0.5543555706038326, 0.570420360726235, 0.048476147224390795, 0.20463023982594114, -0.2588705320277206, 0.92245978852666, -0.30689756863726736, -0.5245977402634077, -0.009831822777176466, -0.027766223050672043, 1.008202316766452, 0.6587756529277264, 0.4283357078553999, -0.17123984258083758, 0.32937641342127366, 0.02797393064576402], 0.19956684613589104),
    (&[1.8948659274095796, 3.365409826735563, -0.26273913865851917, 1.7673149431078083, 2.2168726845658897, 2.7078756230192935, 2.8237539493919184, 0.9351903123488672, 5.649633580734152, 3.7888389139085907, 1.1130788068605226, 1.8548661872128187, 3.5009369188477524, 3.4231534647444013, -0.9761400901060746, 2.624780616468459, 2.6357022266937578, 5.361899630644137, 4.880548592351937, 3.416379513839321, 3.5387688671633044], &[4.175120496109205, 4.202203674282906, 4.357926906719602, 4.584190837598047, 4.810211220880585, 5.036682298231292, 4.703269182230891, 4.134996072937381, 4.319257132632923, 4.95358424610468, 4.6804416371916036, 4.770381224401695, 4.847095987406988, 4.327388361877702, 4.5604550876122225, 4.271878779924698, 4.547922281062072, 4.519714983860018, 4.569575021793763, 4.876919299526775, 5.454113526933303, 4.574729639250484, 3.9034278431502076, 4.995539610413315], 0.9999820797551034),
    (&[-1.1018853832564826, -3.921121833314692, -3.563445376028584, 1.0572017252051178, -4.448981455594805], &[-3.004576253739289, -1.5776675190054736, -0.9633485679535287, -2.083918582032317], 0.6595489057866661),
    (&[1.0968332000776662, 4.826754741452186, 0.7606057466206617, -1.928793964521013, 3.746662379112782, 6.202780735119964, -1.9846629405557228, 3.553104113239771, 3.3397313148943875, 2.5883119987459553, -2.9297167031233, 0.6195187064588853, 3.7361576717412333, 1.9023374423330481], &[-0.25596078888437224, 2.0850822632040007, 5.7170338598179695, 0.7069828659720337, -2.4411470119602017], 0.34065526653065065),
    (&[4.656912764762317, 3.269279063993841, 3.8317562719671114, -0.07170231029990726, -1.7979861095205374, 2.3131148902359344, 1.8566783934111513, 3.5872300653978297, 3.07821895003377, 3.6294309902270414, 2.571466692324265, 4.071710112931223, 3.458657770715491, 0.9310428903043242, 7.722823472297671, 1.3064008053243812, 1.1013993797192247, 5.383085580187474, 5.26993470622946, 5.138679143411547, 5.030241940477687, 4.8685070205792975, 4.5310175575030645, 4.611039104176445, 3.9102470325432135], &[5.4684286154596995, 1.8074144199943896, 5.361190180521588], 0.7182268657716206),
    (&[0.8176873363363247, 1.0127836956097331, 0.8943386514459263, 0.448382307812678, 1.0409747701905925, 0.5958058540631592, 1.2918437560654459, -0.2644938685530418, 0.8433744327006234, 1.2319835484919812, 0.45719593840603956, 0.25075585637835673, 0.9518667546582045], &[-2.0089879995603686, -1.7087173943725187], 0.0009058654257987226),
    (&[-0.6374091442621321, -2.505950328253798, 1.036948992013179, 0.8509879748872982, 4.516680030581659, 0.896497841495344, 2.378722710391034, -0.18388706686274747, -0.5033664879068958], &[-0.3566310489405623, 0.4338572492980559, 0.16448583128005223, -0.10492860552247302, 0.04577735328282184, -0.12160028181091603, -0.8991783741338443, 0.694103041483374, 0.38887451671702167, 0.3274025275612309, 0.2806616371453614, -0.2152890363415503, 0.30508491655412007], 0.20785889353535603),
    (&[-2.514277138525408, -3.3381900680985734, -3.795314784093868, -5.560304822377889, -1.3552684853342372, -2.035715746425756, -3.5690392871854133, -4.027196216520819, -3.091180512378184, 0.28147410083561475, -4.654150629878255, -5.8515528785582, -3.9261150153031075, -0.7915424329278689, -4.964479666176117, -3.206938401901292, -2.1380896904127837, -4.179955823430506, -2.9552598927201137, -2.916788984380231, -1.8115323826136842], &[-2.32271829844128, -1.7757048561889832, -2.4674632189427963, -0.3367565251986515, -2.126920803177294, -1.3641511644916013, -1.39296530407666, -1.3532432959127532, -3.9936882434155834, -1.6090101149264275, -3.281091803011514, -2.0132583496308207], 0.9940120134606268),
    (&[-3.7564234484379284, -2.0555798985242903, -3.101867427592664, -4.181848792263899, -2.874978636039739, -3.499558298083395, -5.430311483273366, -1.7133613342634852, -4.461586044983828, -4.842422661959889, -4.8141136042226025], &[-3.2661691525396215, -0.7245654408669008, -1.9378971432704346, -0.7552166664027681, -1.8193969976885747, 1.5074086591294007, 0.1501026436298991, -2.0000121455507904, -1.9262652077950753, -1.5950916317360475, -1.853921764021251, 0.12683498547804106, 1.6365349575203352, -3.8568813107068003, -0.19637423723422676, -5.072774610522332, -0.6731576474040257, -1.1572133783354956, -2.733037685450018, 0.26183036026630346, -3.0985328412934465, -3.2664644548602615, -1.1590182812802055, -0.12333413050237163, -5.061078409484393], 0.9999037775878411),
    (&[3.427431079255169, 1.5127649268284737, -0.8095594478542578, 3.4067144553159734, -2.5133239786038173, 4.379430585459477], &[3.6211624893129475, 3.631027073923284, 3.2990648175604145, 4.312137641004883, 3.9529991417161283, 4.162239115338047, 3.9056515746346445, 4.475377009539013, 5.030013629437393, 4.187753940312248, 4.217216690078125, 3.8798267744212653, 4.365448924883859, 4.7620115381321195, 4.085598980898774, 5.074000880669853, 4.274356144435349, 3.661812557819593, 3.625154923027154, 3.2062899308111055, 3.4694560819976648, 3.7054692696548663, 3.920059893884738, 4.65777603271857, 4.982939368330318, 4.446063541060532, 4.179844771379844, 3.5116339132263317], 0.9639042590451788),
    (&[-0.30658858947168266, 1.7194145697263155, 2.8328922301650716, -0.6243254517042564, -0.4415228306603506, 0.8356705371401051, -1.7727461703651337, 1.5455361215557983, 1.8743839814030132, 0.8889786640820764, 0.32764519942402287, 0.6194869591760974, 0.032075724757232166, 1.2902533663355746, 0.02174050474602962, -2.0213210880971957, 3.762718701939865, 0.9121245482269601, -1.513888240143179, -2.218337602242491, 1.370029309185971, -1.6258052800075429, 3.0792397917681122], &[4.205690104097092, -2.480515063748083, 3.991102768287066, 0.7197814093203774, 4.477088618862738, 5.169996488741868, 3.3178937725446827, 1.9674039856003351, 3.423657873332922, 4.477637148020496, 3.8687289414858226, -1.8364219314622776, 1.5395165704279499, 4.47908791713825, 5.372363496317779, 1.0984961670600344, 3.086423319409914, 1.975817272535938, 0.5720856292444192, 3.3924460697854477, 1.7019627355845977, 3.2395153410114172, 3.322087491472117, 5.836365630498019], 0.999941193691315),
    (&[7.213848775969831, 8.07054249088071, 1.23963416725312, 3.8564172712603453, 3.421963603573781, 6.6724854604073665, 6.619935345475334, 5.275722404821693, 7.449643958137453, 2.6457396717322363, 0.8553196683946256, 8.732692668859293, 4.7383173559663145, 4.797902260618956, 0.6932100412209876, 4.326291495901322, 2.866184314734217, 5.514223713404661, 5.184027063637348, 1.3576011857756516, 8.551763091649882, 3.39564215270423, -0.6650919212950734, 2.7729984923625834, 8.815247380510325, 4.236801671133796], &[6.551238850139955, 2.921892876070261, 5.5575144058327, 7.045456328303396, 5.137923089147558, 3.62789306280593, 4.321619679169608, 2.3202383006906437, 3.2482793611640486, 4.8603705041309775, 5.217630968283012, 6.464470818097664, 5.878548170631463, 4.028565666773182, 5.020256934400919, 3.3665565044773382, 6.545584002021053, 4.989436120610327, 5.364802728186839, 2.4194101447995378, 2.3185040629265776, 1.4788668798163433, 5.253710093188406, 9.72682226171355, 4.5452903420077675, 7.61402601890058, 6.795091123776123, 4.233593201533808, 6.161654482757932, 6.023662518133125], 0.7409725757539836),
    (&[0.22966032943064474, 0.06409951382064377, -0.13346260035156732, 0.49857240092558364, 0.02142081037823898, 0.029647069859444354, -0.07802674683681679, 0.5793159710452923, -0.4244593731373747, -0.32432131206243964, 0.2992124479763717, -0.22239783888453313, -0.34697799725163175, 0.2648237740182984, -0.2175190470976672, -0.12492551832549881, -0.22125436226455944, 0.5808528855926324, 0.14567909838718032, -0.12665177591238402, -0.28162027861100264, 0.24043377501766466], &[0.5996947929209668, -0.47287411086197906, 0.15561904274213306, 6.9361585043769125, 5.282129811410711, 3.0513339679753413, 2.674372250534138, -1.3032828926602882, -1.6763220796694323, -0.04616189921410685, 0.7663986829458338, 0.3825677498989291, -2.705767205373532], 0.8976567522947771),
    (&[-1.4473018634297912, -1.5332100959724322, -1.7667122698180264, -1.2089574287587537, -1.3510197978804233, -1.2995065779740587, -1.9128399401250509, -0.9829073506290571, -1.8690990350061405, -1.7803169348044992, -1.0169352598897685, -1.5648354553140773, -1.697843915083929, -1.5847186510713578, -1.6271377900687374], &[-4.982221257950763, -3.259233452055646, 0.42812183960394035], 0.28180942541544024),
    (&[-2.0982981220188974, -2.0717369285926064, 0.5244407635449173, -5.830194541448963, -3.7644640410668098, -1.9132867487885938, 0.9506083814868598, 0.26927985303645086, -3.167989264248965, -2.5682267032823884, -2.8414288356760924, -5.243568640202133, -2.634360623776922, 0.1258556813199787, -2.5788957439043525], &[0.05110188215193012, 1.4303390335578041], 0.9700201507912114),
    (&[-0.02849838181944038, -2.3614572571380394, 1.4554497120886507, -0.0867377948189945, 1.2957991035678214, -0.8809599599998736, 0.5975608878211306, -0.6882035268164138, -1.0703349925548116, -0.27996966513617094, -0.03403984537320756, 0.8934777022839221, 0.04686516412723127, 0.2563474120226151, 0.9022377670689944, 0.2659870082773373, 1.9155245137312316, -1.3947162869751395, -1.183637959027031, 2.088323270621952, 0.5400880649825324, 0.08887175609939474, -3.013292583705644, -1.346932130292724, 1.8860032386591383, -0.805801626849053, 1.190964648794322], &[-0.7640704096179121, 0.9133013842162823, -2.0686004871011394, -5.986185533196498, -1.529301918869193, -1.781582716656269, -0.8874909601649346, -5.488709041898958, 0.8240311752110381, 0.132561505678848, 2.739522486704786, -2.016956085780201, -0.45385363773162873, 1.1783212712357227, -0.9202749818534102, 3.1275438516261382, -0.5833886614507642, -3.968845208027711], 0.06482060780569078),
    (&[0.5641399444231318, -0.35026234637598275, 0.4807472734468381], &[-3.4899151640574093, -5.428363101129774, 0.10516907059525527, -0.04208314363452481, -1.7348141200220735, 1.3033403596536859, 3.378136689726821, 3.160988685760526, 6.400199893726609, 6.386467148223947], 0.7203128246296591),
    (&[-1.6708348423048958, -1.7613764053275118], &[-2.977434702292642, -0.7287131591681582, -4.350572667850789, -4.761900312898453, 1.9481334570496713, 0.7386065007536362, -5.64748839173964, -6.808879826727718, -4.95155878259232, -3.421100339531398, -0.8592974369844033, -4.856115636665409, -2.8077022614536915, -1.7660879038622894, -3.13143643649063, -2.5533793194040135, -4.791718128431617, -0.659122926008229, -2.1761329350038854, -0.2720975337486453, 0.8092096642865014, -0.6809596253595849, -4.222630836928382, -0.01968579292389938, -5.163691140684589, -4.156851152279712, -2.405181383810799], 0.024820494078814922),
    (&[-0.29065952253327343, -1.4370104461625866, 0.623362627668352, 1.0245875312255834, -1.11478745756337, -2.2482074582663345, 1.856495072951153, -0.7817695318580538, -2.1215055800790763, -0.5870521579117647, -2.033079163465377, -0.17603251646598606, -0.5208597892519529, -0.3951369081482087], &[2.6520683007968557, 2.376102569927632, 1.4554860828064144], 0.9992850201019722),
    (&[-4.746176827687869, -1.778101306072507, 0.35890633186116183, -6.92020282633614], &[-0.7430542836106842, -0.8441877397533193, -4.936176342876404, -5.030026186545111, -0.9254633232353351, -6.4561583100085596, -0.06637997513368443, -3.050144478153627, -5.401652942447118, -3.2118200988904633, -9.039195027143126, -3.118031767226098], 0.4374980321476137),
    (&[-6.174088568370613, -0.5383868973110886, -3.20371679162157, -2.9333513475177453, -1.834384383640773, -5.858574150091377], &[0.9778348748199819, 2.087195714961225, -1.2915313468799545, 1.2805139448984362, -1.3458365963187988, -1.7225511371467264, 1.9265749050797645, -0.23199420851753755], 0.995931337443127),
    (&[-1.4460196500927698, -1.5406360882970487, -0.9356658412468555, -2.485147134967133, -1.3352286984419603, -2.729342610645359, -1.526789567500118, -1.3359437392479228, -1.3442696629539927, -2.549002473693328, -1.957796429037599, -1.6452639556535256, -1.5361114106774105, -1.8392427272519514, -1.3780270135559731, -1.9298552453248787, -0.563758080266789, -2.2292265878232147, -1.0044764214241262, -0.5922897678375156, -1.7723767703652664, -0.9140113449503289], &[0.07993557131091555, -5.733232490437187, -4.818242738085841, -3.5615135536243088, 0.8771809624682048, -0.05143187704241958, -0.2654079097421027, 1.6583670288961105, -6.48528048801079, -5.137963185086767, -2.8016668688628763, -1.9900966695562081], 0.17987961436611388),
    (&[-5.590767832656201, -3.216049964544503, -4.551493640540363, -3.27584774198581, -8.062819391047231, -8.150282809501071, -4.708615467278144, -5.353401736854008, -8.171640875241199, -2.820125083661776, -5.011044832742785, -2.5877319175848417, -2.181128645842384], &[-6.067114548755139, -3.1267203601827087, -7.538574261864275, -3.3573215494839883, -5.696685491211097, -2.3463415279623407, -7.2563526688966595, -2.8849938786469593, -9.053753115082507, -7.026903542074283, -2.548681618539315, -5.509223152257819, -8.201092853819612, -7.878091240720861, -4.465880020118126, -7.2719010471472085, -3.7587306307526065, -2.419704976186028, 0.10427373534695317, -3.9480414788616134, -3.1083441487653136, -4.13495790152405, -9.303897210803301, -6.67856049878837, -6.555386465600861, -7.774777629765854], 0.3013292122790385),
    (&[-3.7110305839486553, -3.903735697183624, -3.784783293174458, -3.8207768117258243, -3.680556368622791, -3.833044580162998, -3.81628267838079, -3.7538718852652155, -3.4493719837260093, -3.7299127430636965, -3.922791603663646, -3.7158602636408395, -3.8439249948466605, -3.7740003423872084, -3.7039870746740577, -3.8800361736858457, -3.803635062103099, -3.9151632752896126, -3.644985855680279, -3.738873495331667, -3.736782221515445, -3.8415634502751748, -3.789246592453581, -3.576581412296501, -3.81424704413148, -3.7255023013204185, -3.859702328593051, -3.724531452962472, -3.8045847738242395, -3.761621722733618], &[-3.509309919663636, -4.714817474739439, -2.328605061193607, -2.154542230241179, -1.8734851836804403, -2.5443776067968256, -2.9993700981462013, -3.608425249129355, -3.5993444900772427, -3.8452023981144983, -2.8128814682789254, -2.904938689654964, -3.679317880029794, -1.8370077623916083, -3.6696214753386704, -2.9247480322825536, -4.502040952062783, -5.557383933747359, -3.407888719439868, -3.82298880568922, -3.7235780420067, -2.7935821990683682], 0.9853248282658673),
    (&[1.4986904123772717, 4.439323444007405, 5.302728006792471, 0.795652456293447, 7.567739829062935, 1.977424731005922, 3.9054171395627346, 3.184929732697566, -1.9011889013306682], &[4.959322196244811, 6.445540356583482, 2.5503978610210427, 4.261808440037287, 3.5055284498436254, 6.59690842459179], 0.9262557562364137),
    (&[-2.7021726632565013, -3.1978481198791076, -2.9089656535528388, -2.0679776521036195, -1.6738981573488907, -2.7405528895581375, -2.705647823296142, -1.4301804610188171, -2.828806689625127, -1.4796358870160229, -1.5581344418223433, -2.9242495584571637, -2.50291598257716, -3.832483559290048, -2.1406977829982763, -2.102620389259741, -2.571677583141782, -3.0475143018718187], &[-1.4127695656613657, -5.404553030284652, -1.9080818979765204, -4.134098588687414, -2.873336355781758, -5.107556876546562, -2.2610961307077737, -2.868416548082945, -6.090507450985344, -2.310229496271125, -5.019101281455077, -5.490329892695605, -5.767000948706292, -1.2107374974645757, -5.421449205983679, -0.41281963055878856, -4.2574896203833195, -4.835308890169477, -2.629182838525983, -1.7297431788026327, -2.7972846941443814, -7.3842377287102945, -3.7503809132679815, -8.94717551271571, -3.99647080762094, -4.477051824931457, -7.857670832968255, -2.7744711724613644, -4.620883412858001], 0.00021980433711377514),
    (&[-4.187895347703743, -3.8084311866823715, -5.0023288417327185, -5.806070501878665, -3.9940654384733025, -5.270021868773916, -4.445001454809563, -4.900647457855069, -1.9947499206304262, -3.931012477525951, -4.7549490467244535, -3.8302520494253183, -5.161889279097386, -6.3932096378750805], &[-1.8478764843541167, -2.2110974964552543, -7.091024261407519, -2.974162143946224, -4.556434714689607, -2.928490867309983, -1.996819378387269, -5.759346391185686, -5.284582329873533, -5.865538320718596, -2.1886822602186635, -1.5704263519225954, -2.4943495076767115, -4.3898043309404455, -3.2581756549058185], 0.9496064702154015),
    (&[5.423164179424864, 5.247601699695011, 4.5859913474879574], &[2.0482753737301547, 5.249464950643895, 8.097656268775777, 7.023727697579594, 3.6925595773848388, 0.6272808017333089, 7.487921152824701, 7.25839679063745, 5.31144827627934, 6.942530712810063, 3.1893781848699314, 5.486949148741085, 3.7035986684983344, 3.0896262220365878, 4.1654196531616785, 3.6202529391355873, 3.9860528372681774, 6.392525688441497, 9.074663693807443, 6.34515327949257, 3.1806849477416916, 4.41794234181787, 6.118380138793702, 5.752834948756711], 0.5069770145362243),
    (&[-3.1088974324329213, -0.07223245645856191, -1.83761874959092, -1.910166657930559, -1.0154119823630432, -1.935907085881313, -1.222813655262761, -2.1726484221589915, -1.2150831123216836, -1.2470883092432268, -2.607715734591343, -0.337091490221895, -2.380656413390784, -4.056942997460472, -3.5427261545327537, -0.9692992485609665, -0.7405808814474766, -1.21138916387962, 1.592773390112014, -0.6751206863041986, 0.05310074759256289, -0.5517215054978631, -1.6338153624334995, -2.2678350518566877, -2.0748197083755118, -4.583555910179939], &[-3.7145719951589777, -4.494068494395843, -4.17985968075264, -4.678076089951246, -3.7097347439405843, -2.8867058758632984, -4.134836548319402, -4.054049956505161, -4.10295800684255, -4.0824620549755775, -3.8778479446160743, -3.7178340355906068, -3.4404970938709676, -3.865622043852567, -3.753382234806102, -3.7184601107380733, -3.534091133643085, -3.363090722787158, -2.865837674136234, -4.0779436147216614, -4.2126880282223285, -3.872066222246309, -4.440690170900122, -3.4537677424239117, -4.82098364790447, -4.599175975663648], 1.1054889776296599e-09),
    (&[5.812576176065878, 5.5508805592187205, 4.4654427823616, 4.7285022412282345, 4.340043476740465, 5.68399319076225, 6.132606775761259, 5.62602364704663, 6.213157498202389, 6.101135310511274, 4.312224293299052, 5.759444465821921, 5.362801340352543, 4.371742211181419, 5.366792212155435, 5.005049702510646, 5.376358966697669, 5.053973592157979, 6.215448785952818, 5.489509763985809, 5.391937602255695, 5.5667753970841245, 6.319382440505153, 6.479718048520718, 5.744500011912439, 5.453222018073773, 3.8089043871836097, 4.301539285331007, 6.199934252032304, 5.960819358378456], &[2.5324503381361887, 4.683075315682077, -1.515598848731261, 2.9191503122004114, 0.496410563470842, 3.2217710375968807, 1.7399845344883937, 0.41792947617399867, 3.164565497444244, 2.5050005147262433, 5.927593881774838, 6.405625715118114, 1.046509157991578, 5.991990434810534, 2.9295965404950928, 5.947311700047435, 0.3085042487552574, 3.075271167300027, 4.227211984292885, 3.9147280254652284, 1.8968729344027735, 1.8132768145160738, 3.2692870378641774, 0.4620833276704457, 5.568814157818318, 4.3766296831706155], 1.5666664019861466e-06),
    (&[-4.001459626572988, -3.641645628327674], &[-2.2133112463193907, -4.940976773950535, -3.549218051520999, -6.722436525207024, -1.5656563163191837, -0.6282786260577615, 1.7948518736970387, -1.7290723890687056, -1.0916329506600377, -0.5448258180365, -7.321327241735298, -2.3349785275365136, -0.6038840896574931, -1.3791204572739553, -1.8020263709579414, -3.48178228075414, 0.4307162714790671, -10.283561584782817, -4.894135562473874, -1.2679707108938758, -1.8284845021630385, -0.5302636803733103, 4.67131192443504, -2.875154881395824, -1.3001932243636651], 0.9907128064274596),
    (&[-1.2601788614438592, -0.6741730963262076, -0.5308179815280045, -0.8433577822676406, -0.36949423800273495, -1.0973207740379682, -0.5099754730866952, -1.1636053027616144, -1.671300373347142, -1.3948807368870486, -1.223965010902675, -0.4956388861598839, -1.3885549613605774, -0.08267006627157802, 1.1176439196150927, -1.3470597602174732, -0.6598864608714988, -0.5091341604803854, -1.6520252121534251, -0.5400116264970818, -1.111798287527681, -1.1988268305061114, -0.5008045489686095, -2.461323045453996, -0.25343351260677605, -1.4912994276806013, -1.9530418793283346, -0.6238192334466297, -0.6836945559981148, -1.4951217590714727], &[-0.07159284994530282, 0.21598403740311956, 1.3956922359939488, -2.116375449855335, -1.6767650878690281, 1.6502977425754142, 2.383364868605402, -0.9709537096067984, 1.3719624119787466, 0.03442656102699998, 0.0982197170590991, 2.2485640461631, -2.3221544939710523, -1.5811820022777492, 1.4691020292973582, -1.1394712647358236, 0.32689626594463617, 0.7648764695336133, 0.34642747788634753, 1.9182263829970894, -0.1667306271791831, 2.1020730759387227, -0.6872144214520446, -2.218331514739951, -1.553931448946134], 0.998106916112036),
    (&[3.597938857191499, 2.8580120726989797, 1.2719624147123627, -3.656745777024187, -1.2659017736900293, 1.723737313215132, 2.0321843942799105, 4.083443483478892], &[2.0434808355272707, 1.1675969647227107, 1.3827311067719545, 2.1100677450895797, -1.9949857311454338, -4.145306806996205, 0.5476284477646307, -3.0610518063757546, -2.275549711683009, 2.2016474254757443, 1.326946407501207, -2.482948587089232, 2.6001598524031455, 2.3128481306242112, 3.4749845339757766, -2.9172116249911273, 1.4304332993661641, -1.7626427598314192, -2.1840338163043187, -4.62234442894609, -4.661937681659264, -3.857100981780581, -2.500293188101004, -1.6305845510684254, -0.10160934374552477, -1.0392439347525901], 0.03732167925811625),
    (&[2.163115698911078, 1.1908363092593481, 1.3334926666498763, 0.42781736982253027, 1.5433402014716147, 2.386376600872463, 1.135986816973425, 1.7256200874667942, 0.3040968063876154, 1.3289533166797376, 0.48390735817538044, 2.0178829004381766, 1.1367345575013061, 1.7690058064620726, 0.8371885427188728, 1.3777110382410325, 1.2340438541337837, 0.6886576697944167, 2.439146464674563, 1.4899241029573802, 0.3677741801709715], &[0.8423241834718712, -1.4996675470749017, 3.3467746891186705, 2.4914901821689606, 2.1084711239075116, 4.523656023160412, 0.4707598706016104, 1.1068132515860107, 2.997445777114012], 0.7885503596606294),
    (&[-1.5296147332165146, 0.5567522643430196, -5.617717701648191, 4.2406600236082355, 0.1945025630101217, -0.18889181700982027, -0.6157930959680318, -2.657311346810957, -0.07605291334552788, -2.5501575665753613, -0.7486470856529372, -3.4039163002570283, -0.24055816900676535, -1.3173263918088678, 0.26682973193748205], &[0.7912029863769134, 0.3753057054562672, 0.1213263934224762, 2.4774500076871533, -1.2853278804188026, -1.2394804235820605, 0.8958990175518085, 1.3481318236544027, -1.180705768608684, -0.51034821760614, 1.5686734385135839, -0.2330604419636017, -1.6271754264823644, -1.9970147072795086, -0.652300036116907, -1.6066899968932766, 0.7908921668407329, -0.9188526095489226, -3.500144552278199, -1.2549680863262922, -0.8169127743122768, -1.0036403655156914, -0.15047642134974404], 0.7783771424191334),
    (&[0.7601729428496217, -0.8722545908134428, 0.020143406504590095, -2.183083746280262, 1.6275091897900162, 0.029488404994369583, 0.7107776037025615, 1.290838286776089, 0.046542492517746226, 0.018130432502062782, 0.27338026337771937, 0.10260226991660737, 0.9477759090008597, -0.3556169905426577, -0.4922676248743078, -0.46665915807434327, -0.6311059224031964, -0.040727841042772356, 0.7607961974976781, -0.6554397519007601, -0.22693030462527722, -1.0229525321452453], &[-1.2860359013685678, -2.4188770763338607, -0.8015788694853625, 0.747867395253279, 0.1623167784503816, 0.8427710705994278, 1.2657049687640234, -2.1147918337240954, 0.9239101368764913, 2.524836802055291, -0.6162261732391168, -0.5700429694269666, -3.266909673704396, 0.03143182115054516, 0.8276820776850222, 1.9374758486083348, 3.697793261610594, 2.331653826916435, 0.4597666292644788, -1.0466086029264745, -1.0732383954848692, -0.5882269754119833, -0.39388375898855643, 1.8317224981594638, 0.5425031040845594, -0.8582511740129857], 0.6441970191306703),
    (&[-1.193937307204395, 0.545118181483442, -2.7375502446695057, -2.74622277823538, 0.19613363780321547, -0.7501566331218674, -0.6200178257818492, -7.165723976478368, 0.9758146672869223, -0.9664832712056398, -2.269961826290726, -1.2146118335559912, 0.8732532255518586, -4.06921334822845, -2.337417744082945, -4.5640512094884915, -2.5308216670875576, -5.906507888206704, -0.16352928012603707, 1.309308466330958, -2.312037126068835, -0.9282515941515438, -4.182701113407923, -1.5343046740967998, -3.902823289707113, -1.6771032421228187, -1.741578494341166, -5.313172168045896, -1.1221264798251287, -2.816674675039396], &[0.07783470925622882, -1.539926629911946, -5.686107575926768, 0.27036967075477425, -1.6671219087932174, 0.19491341638001214, 1.4228737942760783, -2.2967082588321084, -0.677786701380116, -4.376961498854557, -1.3909918305434978, -0.6060048173455859, -3.5054503096243392, -3.6733080622498675, -3.185284542182557, -2.012638153413268, -1.0222868520999473, 0.8632937116779646, -2.4379665819726695], 0.7467761623532336),
    (&[2.4650138904668735, -1.5362147958821741, -0.26703944392119006, 0.23898673039570928, -1.1283057775234928, 0.5402617799179077, 1.087110879344305, 4.960788119986139, 0.144539286220712, -0.43658007681196365, 0.33884131563777875], &[-0.5570353392951548, 2.5002083920309373, 0.6736529426828997, 2.1949816746499207, -0.4892697219713811, -0.3214989249586695, 1.279584090002218, 2.330148784770283, 0.6700121409322135, 1.45706646589361, 1.614040564951388, 3.0973049675288338, -2.8046230144470465, 2.535291941535359, 1.7131497896008023], 0.7551296701005397),
    (&[-1.0206754729177612, 1.2973508463071037, 0.637039484131394, 0.9804628356102998, 0.32740749115928547, -2.2796988979359836, 0.10538742425388681, -1.0697031524881486, -2.200794517520313, -1.5688470225176057, -3.0003093052447207, -3.1112506254904124, -0.9954551508349412, -1.6860858985355822, -0.8150835273715287, -2.3216567322981425, -0.24189109485992266, 0.9783830267847966, -4.188094163042329], &[-1.747140181212797, -0.8936031125962383, -2.288245467103041, -1.8036120148804626, -1.3431527920769446, -1.04080142385522, -3.2727922707283854, -0.8131220979837581, -1.9179485681001351, -0.43343582096931343, -1.504306690356923, 0.5202284120073368, -0.9402211921781283, -1.1731792752257855, -1.4803392125650554, -1.7815800585698445, -0.8307397898889737, -2.9885086724695427, -2.2899722943736256, 0.3617895488234397, -2.082962390030321, -2.5247826712440453, -0.39251472433855894, -0.9112000851234484, -0.9194500779576474, -1.8049431789342525, -1.6154142828462335, -1.9556181952574305], 0.1833197816090626),
    (&[-3.9310765799202336, -3.7940737259079858, -2.7065288871475737, -0.9655135402598669, -3.6721509855397025, -2.0153740973797993, -3.2254252205525495, -0.9226186170449087, -1.7462264964362473, -3.101674052060167, -1.6764240717275944, -1.6256313187251434, -2.218903126542203, -2.2449662470494562, -1.734936426551684, -4.174814293914483, -3.740036060899472, -1.6090425764778988, -3.307684078891018, 0.10722713367237224, -2.327989437453472, -1.665184219510368], &[-3.2027832510137753, 0.7390572830810358, 3.8771350915618794, 0.03860385816780987, 0.64475473839655, 0.8759897039544824, 0.28937387841987805, -3.3990573348939574, -2.824507951530716, -1.5682900944247833, -9.144067177119387], 0.8477456941258886),
    (&[1.0, 1.0, 1.0, 1.0], &[0.5, 0.6, 0.4, 0.5, 0.55], 6.109037939917413e-05),
    (&[0.0, 0.0, 0.0], &[1.0, 1.1, 0.9], 0.9983416206388216),
    (&[2.0, 2.0], &[1.0, 3.0], 0.5),
    (&[10.0, 10.2, 9.8, 10.1], &[10.0, 10.2, 9.8, 10.1], 0.5),
    (&[0.9, 0.91, 0.89, 0.9, 0.9, 0.9, 0.91, 0.89, 0.9, 0.9], &[0.85, 0.86, 0.84, 0.85, 0.85, 0.85, 0.86, 0.84, 0.85, 0.85], 9.828358791657445e-13),
    (&[1e-08, 2e-08, 1.5e-08], &[1e-09, 2e-09, 1.5e-09], 0.020800522077332618),
];
