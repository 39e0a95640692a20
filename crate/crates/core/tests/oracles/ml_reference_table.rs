pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.1, -0.1, 0.086273512367592319004),
    (0.1, 0.1, -1.0, 0.025082402118662145322),
    (0.1, 0.1, 0.5, 0.43665345237723881872),
    (0.1, 1.0, -0.1, 0.9047657422574315158),
    (0.1, 1.0, -1.0, 0.48556446431108210239),
    (0.1, 1.0, 0.5, 2.0770042471194151832),
    (0.1, 1.1, -0.1, 0.952342577425684842),
    (0.1, 1.1, -1.0, 0.51443553568891789761),
    (0.1, 1.1, 0.5, 2.1540084942388303665),
    (0.1, 1.7, -0.1, 1.0026650848244817788),
    (0.1, 1.7, -1.0, 0.55603672704881190082),
    (0.1, 1.7, 0.5, 2.1355630690972562793),
    (0.1, 2.1, -0.1, 0.87265360423134843947),
    (0.1, 2.1, -1.0, 0.48940646120834410149),
    (0.1, 2.1, 0.5, 1.8118638875402287839),
    (0.25, 0.25, -0.1, 0.22665723253651745143),
    (0.25, 0.25, -1.0, 0.063822257579002721552),
    (0.25, 0.25, -3.0, 0.014567819940323703349),
    (0.25, 0.25, 0.5, 1.0218744670047845623),
    (0.25, 0.25, 2.0, 284355536.74783683914),
    (0.25, 1.0, -0.1, 0.89996132989886404654),
    (0.25, 1.0, -1.0, 0.46385276080171328694),
    (0.25, 1.0, -3.0, 0.21900442756040679925),
    (0.25, 1.0, 0.5, 2.0796142210090508739),
    (0.25, 1.0, 2.0, 35544441.509930781603),
    (0.25, 1.25, -0.1, 1.0003867010113595346),
    (0.25, 1.25, -1.0, 0.53614723919828671306),
    (0.25, 1.25, -3.0, 0.26033185747986440025),
    (0.25, 1.25, 0.5, 2.1592284420181017477),
    (0.25, 1.25, 2.0, 17772220.254965390802),
    (0.25, 1.7, -0.1, 1.0068513956744177718),
    (0.25, 1.7, -1.0, 0.56501752892866691322),
    (0.25, 1.7, -3.0, 0.2835433323536889602),
    (0.25, 1.7, 0.5, 2.0022739407925893963),
    (0.25, 1.7, 2.0, 5103729.2450134675763),
    (0.25, 2.25, -0.1, 0.81313878763361420705),
    (0.25, 2.25, -1.0, 0.47319850284194472142),
    (0.25, 2.25, -3.0, 0.24382246220081986533),
    (0.25, 2.25, 0.5, 1.5161583058680620212),
    (0.25, 2.25, 2.0, 1110762.7839177122979),
    (0.3, 0.3, -0.1, 0.27549390039535823019),
    (0.3, 0.3, -1.0, 0.077316799030089675954),
    (0.3, 0.3, -3.0, 0.017243316421744134765),
    (0.3, 0.3, 0.5, 1.1694769581219357911),
    (0.3, 0.3, 2.0, 400586.4336688223654),
    (0.3, 1.0, -0.1, 0.89881153650272255297),
    (0.3, 1.0, -1.0, 0.45659440832969066901),
    (0.3, 1.0, -3.0, 0.21180263319643578039),
    (0.3, 1.0, 0.5, 2.0620157899559994849),
    (0.3, 1.0, 2.0, 79485.907625183497177),
    (0.3, 1.3, -0.1, 1.0118846349727744703),
    (0.3, 1.3, -1.0, 0.54340559167030933099),
    (0.3, 1.3, -3.0, 0.2627324556011880732),
    (0.3, 1.3, 0.5, 2.1240315799119989698),
    (0.3, 1.3, 2.0, 39742.453812591748589),
    (0.3, 1.7, -0.1, 1.0084698968008866864),
    (0.3, 1.7, -1.0, 0.56818313789775871186),
    (0.3, 1.7, -3.0, 0.28467551211331780362),
    (0.3, 1.7, 0.5, 1.9565797228478282282),
    (0.3, 1.7, 2.0, 15771.127448322351184),
    (0.3, 2.3, -0.1, 0.79224912772209738013),
    (0.3, 2.3, -1.0, 0.46763573237409299923),
    (0.3, 2.3, -3.0, 0.24268090073218356567),
    (0.3, 2.3, 0.5, 1.4241292692966500622),
    (0.3, 2.3, 2.0, 3942.0067252292068796),
    (0.5, 0.5, -0.1, 0.47454388555084362275),
    (0.5, 0.5, -1.0, 0.13660600739194928254),
    (0.5, 0.5, -3.0, 0.02718613000358643569),
    (0.5, 0.5, -7.0, 0.005589203243685752519),
    (0.5, 0.5, -11.0, 0.0023030412087834061382),
    (0.5, 0.5, -15.0, 0.0012454877201698007572),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 2.0, 218.44599836350370111),
    (0.5, 1.0, -0.1, 0.89645697996912664193),
    (0.5, 1.0, -1.0, 0.42758357615580700441),
    (0.5, 1.0, -3.0, 0.17900115118138995042),
    (0.5, 1.0, -7.0, 0.07980005432915293349),
    (0.5, 1.0, -11.0, 0.05108059475808844371),
    (0.5, 1.0, -15.0, 0.037529606388505765746),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 2.0, 108.94090438997797241),
    (0.5, 1.5, -0.1, 1.0354302003087335807),
    (0.5, 1.5, -1.0, 0.57241642384419299559),
    (0.5, 1.5, -3.0, 0.27366628293953668319),
    (0.5, 1.5, -7.0, 0.13145713509583529522),
    (0.5, 1.5, -11.0, 0.086265400476537414208),
    (0.5, 1.5, -15.0, 0.06416469290743294895),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 2.0, 53.970452194988986206),
    (0.5, 1.7, -0.1, 1.0158710479641616403),
    (0.5, 1.7, -1.0, 0.58234985229015789751),
    (0.5, 1.7, -3.0, 0.28742492438164274702),
    (0.5, 1.7, -7.0, 0.14058596399577719605),
    (0.5, 1.7, -11.0, 0.092822715615676409137),
    (0.5, 1.7, -15.0, 0.069253221639841851806),
    (0.5, 1.7, 0.5, 1.7880979696558117026),
    (0.5, 1.7, 2.0, 40.628513092227330509),
    (0.5, 2.5, -0.1, 0.7051033213221006785),
    (0.5, 2.5, -1.0, 0.44403725674868042169),
    (0.5, 2.5, -3.0, 0.23836523509378045659),
    (0.5, 2.5, -7.0, 0.1225117952653127086),
    (0.5, 2.5, -11.0, 0.082296580441165494548),
    (0.5, 2.5, -15.0, 0.061936824559164090556),
    (0.5, 2.5, 0.5, 1.1053672450784064506),
    (0.5, 2.5, 2.0, 12.710518256973368408),
    (0.7, 0.7, -0.1, 0.66666528870184916536),
    (0.7, 0.7, -1.0, 0.2103933463890237074),
    (0.7, 0.7, -3.0, 0.035901729730841233827),
    (0.7, 0.7, -7.0, 0.0058754509273232663292),
    (0.7, 0.7, -11.0, 0.0022233448920236592559),
    (0.7, 0.7, -15.0, 0.0011541395031173379551),
    (0.7, 0.7, -25.0, 0.00039889960023714226338),
    (0.7, 0.7, -40.0, 0.00015219492112585277173),
    (0.7, 0.7, 0.5, 1.6711092247431752666),
    (0.7, 0.7, 2.0, 28.40420422610448255),
    (0.7, 1.0, -0.1, 0.89756112693138677654),
    (0.7, 1.0, -1.0, 0.39961197811559938437),
    (0.7, 1.0, -3.0, 0.13789710966502707183),
    (0.7, 1.0, -7.0, 0.053335564803365703448),
    (0.7, 1.0, -11.0, 0.032657018455494496491),
    (0.7, 1.0, -15.0, 0.023501440278040012771),
    (0.7, 1.0, -25.0, 0.013806344377169999423),
    (0.7, 1.0, -40.0, 0.0085261702309107430991),
    (0.7, 1.0, 0.5, 1.8249850568512024534),
    (0.7, 1.0, 2.0, 20.966433131481951425),
    (0.7, 1.7, -0.1, 1.0243887306861322346),
    (0.7, 1.7, -1.0, 0.60038802188440061563),
    (0.7, 1.7, -3.0, 0.28736763011165764272),
    (0.7, 1.7, -7.0, 0.13523777645666204236),
    (0.7, 1.7, -11.0, 0.087940271049500500319),
    (0.7, 1.7, -15.0, 0.065099903981463999149),
    (0.7, 1.7, -25.0, 0.039447746224913200023),
    (0.7, 1.7, -40.0, 0.024786845744227231423),
    (0.7, 1.7, 0.5, 1.6499701137024049069),
    (0.7, 1.7, 2.0, 9.9832165657409757124),
    (0.7, 2.7, -0.1, 0.61525101556615950778),
    (0.7, 2.7, -1.0, 0.41719533094360414413),
    (0.7, 2.7, -3.0, 0.23430901343084484667),
    (0.7, 2.7, -7.0, 0.12209991333803003879),
    (0.7, 2.7, -11.0, 0.082210038593676708383),
    (0.7, 2.7, -15.0, 0.061915021671873655992),
    (0.7, 2.7, -25.0, 0.038260408216782497134),
    (0.7, 2.7, -40.0, 0.024314125443473383521),
    (0.7, 2.7, 0.5, 0.86021089502440227144),
    (0.7, 2.7, 2.0, 3.0613090065404680463),
    (0.9, 0.9, -0.1, 0.83462474715172490182),
    (0.9, 0.9, -1.0, 0.30814879777662194201),
    (0.9, 0.9, -3.0, 0.0441512717830377251),
    (0.9, 0.9, -7.0, 0.0037514423124251295652),
    (0.9, 0.9, -11.0, 0.0011308480821012407081),
    (0.9, 0.9, -15.0, 0.00054199570979589930344),
    (0.9, 0.9, -25.0, 0.00017468551917377775385),
    (0.9, 0.9, -40.0, 0.000064491183205842518842),
    (0.9, 0.9, -200.0, 2.4049509296826036505e-6),
    (0.9, 0.9, 0.5, 1.6742480910659136781),
    (0.9, 0.9, 2.0, 10.415849710921112402),
    (0.9, 1.0, -0.1, 0.90175694244985940329),
    (0.9, 1.0, -1.0, 0.37606602142464188118),
    (0.9, 1.0, -3.0, 0.08388835403377326904),
    (0.9, 1.0, -7.0, 0.020553253921495641962),
    (0.9, 1.0, -11.0, 0.011405495012401536482),
    (0.9, 1.0, -15.0, 0.0079286024323444488278),
    (0.9, 1.0, -25.0, 0.0045121471218401897739),
    (0.9, 1.0, -40.0, 0.0027434496977921001153),
    (0.9, 1.0, -200.0, 0.00052997543888320925892),
    (0.9, 1.0, 0.5, 1.7043087220993991263),
    (0.9, 1.0, 2.0, 9.6049277845715013047),
    (0.9, 1.7, -0.1, 1.0335118930415507002),
    (0.9, 1.7, -1.0, 0.62464511654730404275),
    (0.9, 1.7, -3.0, 0.28484208641940538332),
    (0.9, 1.7, -7.0, 0.12441001940389251855),
    (0.9, 1.7, -11.0, 0.07883691272532895085),
    (0.9, 1.7, -15.0, 0.057673151415232073452),
    (0.9, 1.7, -25.0, 0.034506635200407786273),
    (0.9, 1.7, -40.0, 0.021531831761213923811),
    (0.9, 1.7, -200.0, 0.004297024427777174206),
    (0.9, 1.7, 0.5, 1.5396925106130902429),
    (0.9, 1.7, 2.0, 5.211323437128282073),
    (0.9, 1.9, -0.1, 0.98243057550140596713),
    (0.9, 1.9, -1.0, 0.62393397857535811882),
    (0.9, 1.9, -3.0, 0.30537054865540891032),
    (0.9, 1.9, -7.0, 0.13992096372550062258),
    (0.9, 1.9, -11.0, 0.089872227726145314865),
    (0.9, 1.9, -15.0, 0.066138093171177036745),
    (0.9, 1.9, -25.0, 0.039819514115126392409),
    (0.9, 1.9, -40.0, 0.024931413757555197497),
    (0.9, 1.9, -200.0, 0.0049973501228055839537),
    (0.9, 1.9, 0.5, 1.4086174441987982526),
    (0.9, 1.9, 2.0, 4.3024638922857506524),
    (0.9, 2.9, -0.1, 0.5265681405229932118),
    (0.9, 2.9, -1.0, 0.38568435522703523483),
    (0.9, 2.9, -3.0, 0.2301411016029138013),
    (0.9, 2.9, -7.0, 0.12217752683266121472),
    (0.9, 2.9, -11.0, 0.082405143873170883379),
    (0.9, 2.9, -15.0, 0.06206479486321422504),
    (0.9, 2.9, -25.0, 0.038332769826490948435),
    (0.9, 2.9, -40.0, 0.024346538792797804944),
    (0.9, 2.9, -200.0, 0.0049737489505713064697),
    (0.9, 2.9, 0.5, 0.67222468046393791193),
    (0.9, 2.9, 2.0, 1.4485221297781689397),
    (0.99, 0.99, -0.1, 0.89829482769816364791),
    (0.99, 0.99, -1.0, 0.36159131535572008744),
    (0.99, 0.99, -3.0, 0.049100971877477643486),
    (0.99, 0.99, -7.0, 0.0012808892091398657021),
    (0.99, 0.99, -11.0, 0.00015037381020739802658),
    (0.99, 0.99, -15.0, 0.000061719048910468290216),
    (0.99, 0.99, -25.0, 0.0000190096029854422869),
    (0.99, 0.99, -40.0, 6.9140852218688714645e-6),
    (0.99, 0.99, -200.0, 2.539291926728953222e-7),
    (0.99, 0.99, 0.5, 1.6518526037673021461),
    (0.99, 0.99, 2.0, 7.6233386386391010599),
    (0.99, 1.0, -0.1, 0.90450358812369841348),
    (0.99, 1.0, -1.0, 0.36854831806033961629),
    (0.99, 1.0, -3.0, 0.05345186750619962362),
    (0.99, 1.0, -7.0, 0.0030045409969559588093),
    (0.99, 1.0, -11.0, 0.0011663730661901190744),
    (0.99, 1.0, -15.0, 0.00078316696851676135818),
    (0.99, 1.0, -25.0, 0.00043846033679165054588),
    (0.99, 1.0, -40.0, 0.00026482722935744475131),
    (0.99, 1.0, -200.0, 0.000050788286036312322319),
    (0.99, 1.0, 0.5, 1.6541261938718982644),
    (0.99, 1.0, 2.0, 7.5665119538014302735),
    (0.99, 1.7, -0.1, 1.0376808792943373261),
    (0.99, 1.7, -1.0, 0.63820401531405007985),
    (0.99, 1.7, -3.0, 0.28334208840981960317),
    (0.99, 1.7, -7.0, 0.11704301684038894887),
    (0.99, 1.7, -11.0, 0.072975316435330445328),
    (0.99, 1.7, -15.0, 0.053060211520482001994),
    (0.99, 1.7, -25.0, 0.031561931564310041709),
    (0.99, 1.7, -40.0, 0.019635848326881415081),
    (0.99, 1.7, -200.0, 0.0039042070820119131938),
    (0.99, 1.7, 0.5, 1.4976408937188259796),
    (0.99, 1.7, 2.0, 4.2839675274283886099),
    (0.99, 1.99, -0.1, 0.95496411876301586517),
    (0.99, 1.99, -1.0, 0.63145168193966038371),
    (0.99, 1.99, -3.0, 0.31551604416460012546),
    (0.99, 1.99, -7.0, 0.14242792271472057731),
    (0.99, 1.99, -11.0, 0.090803056993982716448),
    (0.99, 1.99, -15.0, 0.066614455535432215909),
    (0.99, 1.99, -25.0, 0.039982461586528333978),
    (0.99, 1.99, -40.0, 0.024993379319266063881),
    (0.99, 1.99, -200.0, 0.0049997460585698184384),
    (0.99, 1.99, 0.5, 1.3082523877437965289),
    (0.99, 1.99, 2.0, 3.2832559769007151368),
    (0.99, 2.99, -0.1, 0.48796270455717528269),
    (0.99, 2.99, -1.0, 0.3697226830497384779),
    (0.99, 2.99, -3.0, 0.22800971539258486605),
    (0.99, 2.99, -7.0, 0.1224292358611847763),
    (0.99, 2.99, -11.0, 0.082615575585186963295),
    (0.99, 2.99, -15.0, 0.062203577387630264885),
    (0.99, 2.99, -25.0, 0.038392249045335736275),
    (0.99, 2.99, -40.0, 0.024371761831579342478),
    (0.99, 2.99, -200.0, 0.0049748598837281849008),
    (0.99, 2.99, 0.5, 0.60218871134481174715),
    (0.99, 2.99, 2.0, 1.1260718150540164999),
    (0.999, 0.999, -0.1, 0.90418812659309769217),
    (0.999, 0.999, -1.0, 0.36724764916903786158),
    (0.999, 0.999, -3.0, 0.049716804248493058455),
    (0.999, 0.999, -7.0, 0.00094980914655960181868),
    (0.999, 0.999, -11.0, 0.000030318001257497576694),
    (0.999, 0.999, -15.0, 6.5165387230466608853e-6),
    (0.999, 0.999, -25.0, 1.9140512469096424515e-6),
    (0.999, 0.999, -40.0, 6.9523419239463126634e-7),
    (0.999, 0.999, -200.0, 2.549999012474208421e-8),
    (0.999, 0.999, 0.5, 1.6490395794118553102),
    (0.999, 0.999, 2.0, 7.4119520507151378044),
    (0.999, 1.0, -0.1, 0.90480379077918957459),
    (0.999, 1.0, -1.0, 0.36794468034194146967),
    (0.999, 1.0, -3.0, 0.050156199194891236237),
    (0.999, 1.0, -7.0, 0.0011226152328407221399),
    (0.999, 1.0, -11.0, 0.0001317056810191161473),
    (0.999, 1.0, -15.0, 0.000078417300411775112787),
    (0.999, 1.0, -25.0, 0.000043680772188753774314),
    (0.999, 1.0, -40.0, 0.000026367543533360489352),
    (0.999, 1.0, -200.0, 5.0536034989571419834e-6),
    (0.999, 1.0, 0.5, 1.6492602159574122284),
    (0.999, 1.0, 2.0, 7.406449540177680223),
    (0.999, 1.7, -0.1, 1.0380973243583478546),
    (0.999, 1.7, -1.0, 0.63965946913726987379),
    (0.999, 1.7, -3.0, 0.28320221595436233018),
    (0.999, 1.7, -7.0, 0.11619632278040428947),
    (0.999, 1.7, -11.0, 0.072316581059181557382),
    (0.999, 1.7, -15.0, 0.052550375486438644703),
    (0.999, 1.7, -25.0, 0.031242203289500705352),
    (0.999, 1.7, -40.0, 0.01943184207454900506),
    (0.999, 1.7, -200.0, 0.0038624037617859219548),
    (0.999, 1.7, 0.5, 1.4936636717428442177),
    (0.999, 1.7, 2.0, 4.2097411190683229487),
    (0.999, 1.999, -0.1, 0.95196209220810425411),
    (0.999, 1.999, -1.0, 0.63205531965805853033),
    (0.999, 1.999, -3.0, 0.31661460026836958792),
    (0.999, 1.999, -7.0, 0.14269676925245132541),
    (0.999, 1.999, -11.0, 0.090897117665361898532),
    (0.999, 1.999, -15.0, 0.066661438846639214992),
    (0.999, 1.999, -25.0, 0.039998252769112449849),
    (0.999, 1.999, -40.0, 0.024999340811411665988),
    (0.999, 1.999, -200.0, 0.0049999747319825052143),
    (0.999, 1.999, 0.5, 1.2985204319148244569),
    (0.999, 1.999, 2.0, 3.2032247700888401115),
    (0.999, 2.999, -0.1, 0.48416322685264079868),
    (0.999, 2.999, -1.0, 0.36806438589158579286),
    (0.999, 2.999, -3.0, 0.22777988330397269507),
    (0.999, 2.999, -7.0, 0.12246365260442945762),
    (0.999, 2.999, -11.0, 0.0826417902986316224),
    (0.999, 2.999, -15.0, 0.062220328131643833852),
    (0.999, 2.999, -25.0, 0.038399214291366792123),
    (0.999, 2.999, -40.0, 0.024374672192667223056),
    (0.999, 2.999, -200.0, 0.0049749858381923126814),
    (0.999, 2.999, 0.5, 0.59561134982439883369),
    (0.999, 2.999, 2.0, 1.1000933519809365111),
    (1.0, 1.0, -0.1, 0.90483741803595957316),
    (1.0, 1.0, -1.0, 0.3678794411714423216),
    (1.0, 1.0, -3.0, 0.049787068367863942979),
    (1.0, 1.0, -7.0, 0.000911881965554516208),
    (1.0, 1.0, -11.0, 0.000016701700790245659313),
    (1.0, 1.0, -15.0, 3.0590232050182578837e-7),
    (1.0, 1.0, -25.0, 1.3887943864964020595e-11),
    (1.0, 1.0, -40.0, 4.248354255291588994e-18),
    (1.0, 1.0, -200.0, 1.4899045655957631462e-36),
    (1.0, 1.0, 0.5, 1.6487212707001281468),
    (1.0, 1.0, 2.0, 7.3890560989306502272),
    (1.0, 1.7, -0.1, 1.0381435816780761257),
    (1.0, 1.7, -1.0, 0.63982232416874309278),
    (1.0, 1.7, -3.0, 0.28318692263791900163),
    (1.0, 1.7, -7.0, 0.11610088042729517246),
    (1.0, 1.7, -11.0, 0.072242510740537492352),
    (1.0, 1.7, -15.0, 0.052493160856878765387),
    (1.0, 1.7, -25.0, 0.031206394407581291724),
    (1.0, 1.7, -40.0, 0.019409015943611185687),
    (1.0, 1.7, -200.0, 0.0038577317885718084855),
    (1.0, 1.7, 0.5, 1.493224210163741144),
    (1.0, 1.7, 2.0, 4.2016616529469314164),
    (1.0, 2.0, -0.1, 0.95162581964040426836),
    (1.0, 2.0, -1.0, 0.6321205588285576784),
    (1.0, 2.0, -3.0, 0.31673764387737868567),
    (1.0, 2.0, -7.0, 0.1427268740049207834),
    (1.0, 2.0, -11.0, 0.090907572572655432213),
    (1.0, 2.0, -15.0, 0.066666646273178633212),
    (1.0, 2.0, -25.0, 0.039999999999444482245),
    (1.0, 2.0, -40.0, 0.024999999999999999894),
    (1.0, 2.0, -200.0, 0.005),
    (1.0, 2.0, 0.5, 1.2974425414002562937),
    (1.0, 2.0, 2.0, 3.1945280494653251136),
    (1.0, 3.0, -0.1, 0.48374180359595731642),
    (1.0, 3.0, -1.0, 0.3678794411714423216),
    (1.0, 3.0, -3.0, 0.22775411870754043811),
    (1.0, 3.0, -7.0, 0.12246758942786845951),
    (1.0, 3.0, -11.0, 0.082644766129758597072),
    (1.0, 3.0, -15.0, 0.062222223581788091119),
    (1.0, 3.0, -25.0, 0.03840000000002222071),
    (1.0, 3.0, -40.0, 0.024375000000000000003),
    (1.0, 3.0, -200.0, 0.004975),
    (1.0, 3.0, 0.5, 0.59488508280051258739),
    (1.0, 3.0, 2.0, 1.0972640247326625568),
];
