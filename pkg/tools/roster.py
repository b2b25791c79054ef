"""Country/territory roster for the frozen snapshot fixture.

214 reporting entities with the descriptive fields the 13-column layout
needs.  Entries: (country, iso2c, iso3c, region, capital, longitude,
latitude, income, lending).  The 17 entities in EXCLUDED have no observed
values at all in the fixture.
"""

EAP = "East Asia & Pacific"
ECA = "Europe & Central Asia"
LAC = "Latin America & Caribbean"
MENA = "Middle East & North Africa"
NAC = "North America"
SAS = "South Asia"
SSA = "Sub-Saharan Africa"

HI = "High income"
UM = "Upper middle income"
LM = "Lower middle income"
LO = "Low income"

IBRD = "IBRD"
IDA = "IDA"
BLEND = "Blend"
NC = "Not classified"

# fmt: off
ROSTER = [
    # --- East Asia & Pacific (34) ---
    ("Australia", "AU", "AUS", EAP, "Canberra", "149.129", "-35.282", HI, NC),
    ("Brunei Darussalam", "BN", "BRN", EAP, "Bandar Seri Begawan", "114.946", "4.94199", HI, NC),
    ("Cambodia", "KH", "KHM", EAP, "Phnom Penh", "104.874", "11.5556", LM, IDA),
    ("China", "CN", "CHN", EAP, "Beijing", "116.286", "40.0495", UM, IBRD),
    ("Fiji", "FJ", "FJI", EAP, "Suva", "178.399", "-18.1149", UM, BLEND),
    ("French Polynesia", "PF", "PYF", EAP, "Papeete", "-149.57", "-17.535", HI, NC),
    ("Hong Kong SAR, China", "HK", "HKG", EAP, "", "114.109", "22.3964", HI, NC),
    ("Indonesia", "ID", "IDN", EAP, "Jakarta", "106.83", "-6.19752", UM, IBRD),
    ("Japan", "JP", "JPN", EAP, "Tokyo", "139.77", "35.67", HI, NC),
    ("Kiribati", "KI", "KIR", EAP, "Tarawa", "172.979", "1.32905", LM, IDA),
    ("Korea, Dem. People's Rep.", "KP", "PRK", EAP, "Pyongyang", "125.754", "39.0319", LO, NC),
    ("Korea, Rep.", "KR", "KOR", EAP, "Seoul", "126.957", "37.5323", HI, NC),
    ("Lao PDR", "LA", "LAO", EAP, "Vientiane", "102.177", "18.5826", LM, IDA),
    ("Macao SAR, China", "MO", "MAC", EAP, "", "113.55", "22.1667", HI, NC),
    ("Malaysia", "MY", "MYS", EAP, "Kuala Lumpur", "101.684", "3.12433", UM, IBRD),
    ("Marshall Islands", "MH", "MHL", EAP, "Majuro", "171.135", "7.11046", UM, IDA),
    ("Micronesia, Fed. Sts.", "FM", "FSM", EAP, "Palikir", "158.185", "6.91771", LM, IDA),
    ("Mongolia", "MN", "MNG", EAP, "Ulaanbaatar", "106.937", "47.9129", LM, IBRD),
    ("Myanmar", "MM", "MMR", EAP, "Naypyidaw", "95.9562", "21.914", LM, IDA),
    ("Nauru", "NR", "NRU", EAP, "Yaren District", "166.92", "-0.5477", HI, IBRD),
    ("New Caledonia", "NC", "NCL", EAP, "Noumea", "166.464", "-22.2677", HI, NC),
    ("New Zealand", "NZ", "NZL", EAP, "Wellington", "174.776", "-41.2865", HI, NC),
    ("Palau", "PW", "PLW", EAP, "Ngerulmud", "134.479", "7.34194", HI, IBRD),
    ("Papua New Guinea", "PG", "PNG", EAP, "Port Moresby", "147.194", "-9.47357", LM, BLEND),
    ("Philippines", "PH", "PHL", EAP, "Manila", "121.035", "14.5515", LM, IBRD),
    ("Samoa", "WS", "WSM", EAP, "Apia", "-171.752", "-13.8314", LM, IDA),
    ("Singapore", "SG", "SGP", EAP, "Singapore", "103.85", "1.28941", HI, NC),
    ("Solomon Islands", "SB", "SLB", EAP, "Honiara", "159.949", "-9.42676", LM, IDA),
    ("Thailand", "TH", "THA", EAP, "Bangkok", "100.521", "13.7308", UM, IBRD),
    ("Timor-Leste", "TL", "TLS", EAP, "Dili", "125.567", "-8.56667", LM, BLEND),
    ("Tonga", "TO", "TON", EAP, "Nuku'alofa", "-175.216", "-21.136", UM, IDA),
    ("Tuvalu", "TV", "TUV", EAP, "Funafuti", "179.089", "-8.6405", UM, IDA),
    ("Vanuatu", "VU", "VUT", EAP, "Port Vila", "168.321", "-17.7404", LM, IDA),
    ("Viet Nam", "VN", "VNM", EAP, "Hanoi", "105.825", "21.0069", LM, IBRD),
    # --- Europe & Central Asia (58) ---
    ("Albania", "AL", "ALB", ECA, "Tirana", "19.8172", "41.3317", UM, IBRD),
    ("Andorra", "AD", "AND", ECA, "Andorra la Vella", "1.5218", "42.5075", HI, NC),
    ("Armenia", "AM", "ARM", ECA, "Yerevan", "44.509", "40.1596", UM, IBRD),
    ("Austria", "AT", "AUT", ECA, "Vienna", "16.3798", "48.2201", HI, NC),
    ("Azerbaijan", "AZ", "AZE", ECA, "Baku", "49.8932", "40.3834", UM, IBRD),
    ("Belarus", "BY", "BLR", ECA, "Minsk", "27.5766", "53.9678", UM, IBRD),
    ("Belgium", "BE", "BEL", ECA, "Brussels", "4.36761", "50.8371", HI, NC),
    ("Bosnia and Herzegovina", "BA", "BIH", ECA, "Sarajevo", "18.4214", "43.8607", UM, IBRD),
    ("Bulgaria", "BG", "BGR", ECA, "Sofia", "23.3238", "42.7105", HI, IBRD),
    ("Channel Islands", "JG", "CHI", ECA, "", "-2.3644", "49.4542", HI, NC),
    ("Croatia", "HR", "HRV", ECA, "Zagreb", "15.9614", "45.8069", HI, IBRD),
    ("Cyprus", "CY", "CYP", ECA, "Nicosia", "33.3736", "35.1676", HI, NC),
    ("Czechia", "CZ", "CZE", ECA, "Prague", "14.4205", "50.0878", HI, NC),
    ("Denmark", "DK", "DNK", ECA, "Copenhagen", "12.5681", "55.6763", HI, NC),
    ("Estonia", "EE", "EST", ECA, "Tallinn", "24.7586", "59.4392", HI, NC),
    ("Faroe Islands", "FO", "FRO", ECA, "Torshavn", "-6.91181", "62.0107", HI, NC),
    ("Finland", "FI", "FIN", ECA, "Helsinki", "24.9525", "60.1608", HI, NC),
    ("France", "FR", "FRA", ECA, "Paris", "2.35097", "48.8566", HI, NC),
    ("Georgia", "GE", "GEO", ECA, "Tbilisi", "44.793", "41.71", UM, IBRD),
    ("Germany", "DE", "DEU", ECA, "Berlin", "13.4115", "52.5235", HI, NC),
    ("Gibraltar", "GI", "GIB", ECA, "", "-5.3536", "36.1412", HI, NC),
    ("Greece", "GR", "GRC", ECA, "Athens", "23.7166", "37.9792", HI, NC),
    ("Greenland", "GL", "GRL", ECA, "Nuuk", "-51.7214", "64.1836", HI, NC),
    ("Hungary", "HU", "HUN", ECA, "Budapest", "19.0408", "47.4984", HI, NC),
    ("Iceland", "IS", "ISL", ECA, "Reykjavik", "-21.8952", "64.1353", HI, NC),
    ("Ireland", "IE", "IRL", ECA, "Dublin", "-6.26749", "53.3441", HI, NC),
    ("Isle of Man", "IM", "IMN", ECA, "Douglas", "-4.47928", "54.1509", HI, NC),
    ("Italy", "IT", "ITA", ECA, "Rome", "12.4823", "41.8955", HI, NC),
    ("Kazakhstan", "KZ", "KAZ", ECA, "Astana", "71.4382", "51.1879", UM, IBRD),
    ("Kosovo", "XK", "XKX", ECA, "Pristina", "20.926", "42.565", UM, IDA),
    ("Kyrgyz Republic", "KG", "KGZ", ECA, "Bishkek", "74.6057", "42.8851", LM, IDA),
    ("Latvia", "LV", "LVA", ECA, "Riga", "24.1048", "56.9465", HI, NC),
    ("Liechtenstein", "LI", "LIE", ECA, "Vaduz", "9.52148", "47.1411", HI, NC),
    ("Lithuania", "LT", "LTU", ECA, "Vilnius", "25.2799", "54.6896", HI, NC),
    ("Luxembourg", "LU", "LUX", ECA, "Luxembourg", "6.1296", "49.61", HI, NC),
    ("Moldova", "MD", "MDA", ECA, "Chisinau", "28.8497", "47.0167", UM, IBRD),
    ("Monaco", "MC", "MCO", ECA, "Monaco", "7.41891", "43.7325", HI, NC),
    ("Montenegro", "ME", "MNE", ECA, "Podgorica", "19.2595", "42.4602", UM, IBRD),
    ("Netherlands", "NL", "NLD", ECA, "Amsterdam", "4.89095", "52.3738", HI, NC),
    ("North Macedonia", "MK", "MKD", ECA, "Skopje", "21.4361", "42.0024", UM, IBRD),
    ("Norway", "NO", "NOR", ECA, "Oslo", "10.7387", "59.9138", HI, NC),
    ("Poland", "PL", "POL", ECA, "Warsaw", "21.02", "52.26", HI, IBRD),
    ("Portugal", "PT", "PRT", ECA, "Lisbon", "-9.13552", "38.7072", HI, NC),
    ("Romania", "RO", "ROU", ECA, "Bucharest", "26.0979", "44.4479", HI, IBRD),
    ("Russian Federation", "RU", "RUS", ECA, "Moscow", "37.6176", "55.7558", UM, IBRD),
    ("San Marino", "SM", "SMR", ECA, "San Marino", "12.4486", "43.9322", HI, NC),
    ("Serbia", "RS", "SRB", ECA, "Belgrade", "20.4656", "44.8024", UM, IBRD),
    ("Slovak Republic", "SK", "SVK", ECA, "Bratislava", "17.1073", "48.1484", HI, NC),
    ("Slovenia", "SI", "SVN", ECA, "Ljubljana", "14.5044", "46.0546", HI, NC),
    ("Spain", "ES", "ESP", ECA, "Madrid", "-3.70327", "40.4167", HI, NC),
    ("Sweden", "SE", "SWE", ECA, "Stockholm", "18.0645", "59.3327", HI, NC),
    ("Switzerland", "CH", "CHE", ECA, "Bern", "7.44821", "46.948", HI, NC),
    ("Tajikistan", "TJ", "TJK", ECA, "Dushanbe", "68.7864", "38.5878", LM, IDA),
    ("Turkiye", "TR", "TUR", ECA, "Ankara", "32.3606", "39.7153", UM, IBRD),
    ("Turkmenistan", "TM", "TKM", ECA, "Ashgabat", "58.3794", "37.9509", UM, IBRD),
    ("Ukraine", "UA", "UKR", ECA, "Kiev", "30.5038", "50.4536", UM, IBRD),
    ("United Kingdom", "GB", "GBR", ECA, "London", "-0.126236", "51.5002", HI, NC),
    ("Uzbekistan", "UZ", "UZB", ECA, "Tashkent", "69.269", "41.3052", LM, BLEND),
    # --- Latin America & Caribbean (42) ---
    ("Antigua and Barbuda", "AG", "ATG", LAC, "Saint John's", "-61.8456", "17.1175", HI, IBRD),
    ("Argentina", "AR", "ARG", LAC, "Buenos Aires", "-58.4173", "-34.6118", UM, IBRD),
    ("Aruba", "AW", "ABW", LAC, "Oranjestad", "-70.0167", "12.5167", HI, NC),
    ("Bahamas, The", "BS", "BHS", LAC, "Nassau", "-77.339", "25.0661", HI, NC),
    ("Barbados", "BB", "BRB", LAC, "Bridgetown", "-59.6105", "13.0935", HI, NC),
    ("Belize", "BZ", "BLZ", LAC, "Belmopan", "-88.7713", "17.2534", UM, IBRD),
    ("Bolivia", "BO", "BOL", LAC, "La Paz", "-66.1936", "-13.9908", LM, IBRD),
    ("Brazil", "BR", "BRA", LAC, "Brasilia", "-47.9292", "-15.7801", UM, IBRD),
    ("British Virgin Islands", "VG", "VGB", LAC, "Road Town", "-64.6231", "18.4207", HI, NC),
    ("Cayman Islands", "KY", "CYM", LAC, "George Town", "-81.3857", "19.3022", HI, NC),
    ("Chile", "CL", "CHL", LAC, "Santiago", "-70.6475", "-33.475", HI, IBRD),
    ("Colombia", "CO", "COL", LAC, "Bogota", "-74.082", "4.60987", UM, IBRD),
    ("Costa Rica", "CR", "CRI", LAC, "San Jose", "-84.0089", "9.63701", UM, IBRD),
    ("Cuba", "CU", "CUB", LAC, "Havana", "-82.3667", "23.1333", UM, NC),
    ("Curacao", "CW", "CUW", LAC, "Willemstad", "-68.99", "12.1167", HI, NC),
    ("Dominica", "DM", "DMA", LAC, "Roseau", "-61.39", "15.2976", UM, BLEND),
    ("Dominican Republic", "DO", "DOM", LAC, "Santo Domingo", "-69.8908", "18.479", UM, IBRD),
    ("Ecuador", "EC", "ECU", LAC, "Quito", "-78.5243", "-0.229498", UM, IBRD),
    ("El Salvador", "SV", "SLV", LAC, "San Salvador", "-89.2073", "13.7034", UM, IBRD),
    ("Grenada", "GD", "GRD", LAC, "Saint George's", "-61.7449", "12.0653", UM, BLEND),
    ("Guatemala", "GT", "GTM", LAC, "Guatemala City", "-90.5328", "14.6248", UM, IBRD),
    ("Guyana", "GY", "GUY", LAC, "Georgetown", "-58.1548", "6.80461", HI, IDA),
    ("Haiti", "HT", "HTI", LAC, "Port-au-Prince", "-72.3288", "18.5392", LM, IDA),
    ("Honduras", "HN", "HND", LAC, "Tegucigalpa", "-87.4667", "15.1333", LM, IDA),
    ("Jamaica", "JM", "JAM", LAC, "Kingston", "-76.792", "17.9927", UM, IBRD),
    ("Mexico", "MX", "MEX", LAC, "Mexico City", "-99.1276", "19.427", UM, IBRD),
    ("Nicaragua", "NI", "NIC", LAC, "Managua", "-86.2734", "12.1475", LM, IDA),
    ("Panama", "PA", "PAN", LAC, "Panama City", "-79.5188", "8.99427", HI, IBRD),
    ("Paraguay", "PY", "PRY", LAC, "Asuncion", "-57.6362", "-25.3005", UM, IBRD),
    ("Peru", "PE", "PER", LAC, "Lima", "-77.0465", "-12.0931", UM, IBRD),
    ("Puerto Rico", "PR", "PRI", LAC, "San Juan", "-66", "18.23", HI, NC),
    ("Sint Maarten (Dutch part)", "SX", "SXM", LAC, "Philipsburg", "-63.0538", "18.0255", HI, NC),
    ("St. Kitts and Nevis", "KN", "KNA", LAC, "Basseterre", "-62.7309", "17.3", HI, IBRD),
    ("St. Lucia", "LC", "LCA", LAC, "Castries", "-60.9832", "14", UM, BLEND),
    ("St. Martin (French part)", "MF", "MAF", LAC, "Marigot", "-63.0823", "18.0709", HI, NC),
    ("St. Vincent and the Grenadines", "VC", "VCT", LAC, "Kingstown", "-61.2653", "13.2035", UM, BLEND),
    ("Suriname", "SR", "SUR", LAC, "Paramaribo", "-55.1679", "5.8232", UM, IBRD),
    ("Trinidad and Tobago", "TT", "TTO", LAC, "Port of Spain", "-61.4789", "10.6596", HI, IBRD),
    ("Turks and Caicos Islands", "TC", "TCA", LAC, "Grand Turk", "-71.141", "21.4664", HI, NC),
    ("Uruguay", "UY", "URY", LAC, "Montevideo", "-56.0675", "-34.8941", HI, IBRD),
    ("Venezuela, RB", "VE", "VEN", LAC, "Caracas", "-66.1936", "10.6031", "", IBRD),
    ("Virgin Islands (U.S.)", "VI", "VIR", LAC, "Charlotte Amalie", "-64.8963", "18.3358", HI, NC),
    # --- Middle East & North Africa (21) ---
    ("Algeria", "DZ", "DZA", MENA, "Algiers", "3.05097", "36.7397", UM, IBRD),
    ("Bahrain", "BH", "BHR", MENA, "Manama", "50.5354", "26.1921", HI, NC),
    ("Djibouti", "DJ", "DJI", MENA, "Djibouti", "43.1425", "11.5806", LM, IDA),
    ("Egypt, Arab Rep.", "EG", "EGY", MENA, "Cairo", "31.2461", "30.0982", LM, IBRD),
    ("Iran, Islamic Rep.", "IR", "IRN", MENA, "Tehran", "51.4447", "35.6878", LM, IBRD),
    ("Iraq", "IQ", "IRQ", MENA, "Baghdad", "44.394", "33.3302", UM, IBRD),
    ("Israel", "IL", "ISR", MENA, "Jerusalem", "35.2035", "31.7717", HI, NC),
    ("Jordan", "JO", "JOR", MENA, "Amman", "35.9263", "31.9497", LM, IBRD),
    ("Kuwait", "KW", "KWT", MENA, "Kuwait City", "47.9824", "29.3721", HI, NC),
    ("Lebanon", "LB", "LBN", MENA, "Beirut", "35.5134", "33.8872", LM, IBRD),
    ("Libya", "LY", "LBY", MENA, "Tripoli", "13.1072", "32.8578", UM, IBRD),
    ("Malta", "MT", "MLT", MENA, "Valletta", "14.5189", "35.9042", HI, NC),
    ("Morocco", "MA", "MAR", MENA, "Rabat", "-6.8704", "33.9905", LM, IBRD),
    ("Oman", "OM", "OMN", MENA, "Muscat", "58.5874", "23.6105", HI, IBRD),
    ("Qatar", "QA", "QAT", MENA, "Doha", "51.5082", "25.2948", HI, NC),
    ("Saudi Arabia", "SA", "SAU", MENA, "Riyadh", "46.6977", "24.6748", HI, NC),
    ("Syrian Arab Republic", "SY", "SYR", MENA, "Damascus", "36.3119", "33.5146", LO, IDA),
    ("Tunisia", "TN", "TUN", MENA, "Tunis", "10.21", "36.7899", LM, IBRD),
    ("United Arab Emirates", "AE", "ARE", MENA, "Abu Dhabi", "54.3705", "24.4764", HI, NC),
    ("West Bank and Gaza", "PS", "PSE", MENA, "", "35.2118", "31.9038", LM, NC),
    ("Yemen, Rep.", "YE", "YEM", MENA, "Sana'a", "44.2075", "15.352", LO, IDA),
    # --- North America (3) ---
    ("Bermuda", "BM", "BMU", NAC, "Hamilton", "-64.706", "32.3293", HI, NC),
    ("Canada", "CA", "CAN", NAC, "Ottawa", "-75.6919", "45.4215", HI, NC),
    ("United States", "US", "USA", NAC, "Washington D.C.", "-77.032", "38.8895", HI, NC),
    # --- South Asia (8) ---
    ("Afghanistan", "AF", "AFG", SAS, "Kabul", "69.1761", "34.5228", LO, IDA),
    ("Bangladesh", "BD", "BGD", SAS, "Dhaka", "90.4113", "23.7055", LM, IDA),
    ("Bhutan", "BT", "BTN", SAS, "Thimphu", "89.6177", "27.5768", LM, IDA),
    ("India", "IN", "IND", SAS, "New Delhi", "77.225", "28.6353", LM, IBRD),
    ("Maldives", "MV", "MDV", SAS, "Male", "73.5109", "4.1742", UM, IDA),
    ("Nepal", "NP", "NPL", SAS, "Kathmandu", "85.3157", "27.6939", LM, IDA),
    ("Pakistan", "PK", "PAK", SAS, "Islamabad", "72.8", "30.5167", LM, BLEND),
    ("Sri Lanka", "LK", "LKA", SAS, "Colombo", "79.8528", "6.92148", LM, IDA),
    # --- Sub-Saharan Africa (48) ---
    ("Angola", "AO", "AGO", SSA, "Luanda", "13.242", "-8.81155", LM, IBRD),
    ("Benin", "BJ", "BEN", SSA, "Porto-Novo", "2.6323", "6.4779", LM, IDA),
    ("Botswana", "BW", "BWA", SSA, "Gaborone", "25.9201", "-24.6544", UM, IBRD),
    ("Burkina Faso", "BF", "BFA", SSA, "Ouagadougou", "-1.53395", "12.3605", LO, IDA),
    ("Burundi", "BI", "BDI", SSA, "Bujumbura", "29.3639", "-3.3784", LO, IDA),
    ("Cabo Verde", "CV", "CPV", SSA, "Praia", "-23.5087", "14.9218", LM, BLEND),
    ("Cameroon", "CM", "CMR", SSA, "Yaounde", "11.5174", "3.8721", LM, BLEND),
    ("Central African Republic", "CF", "CAF", SSA, "Bangui", "21.6407", "5.63056", LO, IDA),
    ("Chad", "TD", "TCD", SSA, "N'Djamena", "15.0445", "12.1048", LO, IDA),
    ("Comoros", "KM", "COM", SSA, "Moroni", "43.2418", "-11.6986", LM, IDA),
    ("Congo, Dem. Rep.", "CD", "COD", SSA, "Kinshasa", "15.3222", "-4.325", LO, IDA),
    ("Congo, Rep.", "CG", "COG", SSA, "Brazzaville", "15.2662", "-4.2767", LM, BLEND),
    ("Cote d'Ivoire", "CI", "CIV", SSA, "Yamoussoukro", "-4.0305", "5.332", LM, IDA),
    ("Equatorial Guinea", "GQ", "GNQ", SSA, "Malabo", "8.7741", "3.7523", UM, IBRD),
    ("Eritrea", "ER", "ERI", SSA, "Asmara", "38.9183", "15.3315", LO, IDA),
    ("Eswatini", "SZ", "SWZ", SSA, "Mbabane", "31.4659", "-26.5225", LM, IBRD),
    ("Ethiopia", "ET", "ETH", SSA, "Addis Ababa", "38.7468", "9.02274", LO, IDA),
    ("Gabon", "GA", "GAB", SSA, "Libreville", "9.45162", "0.38832", UM, IBRD),
    ("Gambia, The", "GM", "GMB", SSA, "Banjul", "-16.5885", "13.4495", LO, IDA),
    ("Ghana", "GH", "GHA", SSA, "Accra", "-0.20795", "5.57045", LM, IDA),
    ("Guinea", "GN", "GIN", SSA, "Conakry", "-13.7", "9.51667", LM, IDA),
    ("Guinea-Bissau", "GW", "GNB", SSA, "Bissau", "-15.1804", "11.8037", LO, IDA),
    ("Kenya", "KE", "KEN", SSA, "Nairobi", "36.8126", "-1.27975", LM, BLEND),
    ("Lesotho", "LS", "LSO", SSA, "Maseru", "27.7167", "-29.5208", LM, IDA),
    ("Liberia", "LR", "LBR", SSA, "Monrovia", "-10.7957", "6.30039", LO, IDA),
    ("Madagascar", "MG", "MDG", SSA, "Antananarivo", "45.7167", "-20.4667", LO, IDA),
    ("Malawi", "MW", "MWI", SSA, "Lilongwe", "33.7703", "-13.9899", LO, IDA),
    ("Mali", "ML", "MLI", SSA, "Bamako", "-7.50034", "13.5667", LO, IDA),
    ("Mauritania", "MR", "MRT", SSA, "Nouakchott", "-15.9824", "18.2367", LM, IDA),
    ("Mauritius", "MU", "MUS", SSA, "Port Louis", "57.4977", "-20.1605", UM, IBRD),
    ("Mozambique", "MZ", "MOZ", SSA, "Maputo", "32.5713", "-25.9664", LO, IDA),
    ("Namibia", "NA", "NAM", SSA, "Windhoek", "17.0931", "-22.5648", UM, IBRD),
    ("Niger", "NE", "NER", SSA, "Niamey", "2.1073", "13.514", LO, IDA),
    ("Nigeria", "NG", "NGA", SSA, "Abuja", "7.48906", "9.05804", LM, BLEND),
    ("Rwanda", "RW", "RWA", SSA, "Kigali", "30.0587", "-1.95325", LO, IDA),
    ("Sao Tome and Principe", "ST", "STP", SSA, "Sao Tome", "6.6071", "0.20618", LM, IDA),
    ("Senegal", "SN", "SEN", SSA, "Dakar", "-17.4734", "14.7247", LM, IDA),
    ("Seychelles", "SC", "SYC", SSA, "Victoria", "55.4466", "-4.6309", HI, IBRD),
    ("Sierra Leone", "SL", "SLE", SSA, "Freetown", "-13.2134", "8.4821", LO, IDA),
    ("Somalia", "SO", "SOM", SSA, "Mogadishu", "45.3254", "2.07515", LO, IDA),
    ("South Africa", "ZA", "ZAF", SSA, "Pretoria", "28.1871", "-25.746", UM, IBRD),
    ("South Sudan", "SS", "SSD", SSA, "Juba", "31.6", "4.85", LO, IDA),
    ("Sudan", "SD", "SDN", SSA, "Khartoum", "32.5363", "15.5932", LO, IDA),
    ("Tanzania", "TZ", "TZA", SSA, "Dodoma", "35.7382", "-6.17486", LM, IDA),
    ("Togo", "TG", "TGO", SSA, "Lome", "1.2255", "6.1228", LO, IDA),
    ("Uganda", "UG", "UGA", SSA, "Kampala", "32.5729", "0.314269", LO, IDA),
    ("Zambia", "ZM", "ZMB", SSA, "Lusaka", "28.2937", "-15.3982", LM, IDA),
    ("Zimbabwe", "ZW", "ZWE", SSA, "Harare", "31.0672", "-17.8312", LM, BLEND),
]
# fmt: on

EXCLUDED = [
    "Aruba",
    "British Virgin Islands",
    "Cayman Islands",
    "Channel Islands",
    "Curacao",
    "Faroe Islands",
    "French Polynesia",
    "Gibraltar",
    "Hong Kong SAR, China",
    "Isle of Man",
    "Kosovo",
    "Liechtenstein",
    "Macao SAR, China",
    "New Caledonia",
    "Sint Maarten (Dutch part)",
    "St. Martin (French part)",
    "Turks and Caicos Islands",
]


def by_region():
    out = {}
    for row in ROSTER:
        out.setdefault(row[3], []).append(row[0])
    return out


if __name__ == "__main__":
    regions = by_region()
    total = sum(len(v) for v in regions.values())
    print(f"{total} entities")
    for region, names in sorted(regions.items()):
        excluded = [n for n in names if n in EXCLUDED]
        print(f"  {region}: {len(names)} ({len(excluded)} all-missing)")
    assert total == 214, total
    assert len(EXCLUDED) == 17
    names = [r[0] for r in ROSTER]
    assert len(set(names)) == 214, "duplicate country names"
    assert all(e in names for e in EXCLUDED)
