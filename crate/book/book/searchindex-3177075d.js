window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#quick-start","introduction.html#layout","special-functions.html#special-functions","special-functions.html#digamma","special-functions.html#nielsen-beta","special-functions.html#exponential-integral","special-functions.html#hurwitz-zeta-at-s--2","special-functions.html#complex-dilogarithm","quadrature.html#quadrature","quadrature.html#half-line-integrals","quadrature.html#cosine-weighted-integrals","quadrature.html#convolutions","quadrature.html#forward-laplace-transforms","transforms.html#the-transform-family","transforms.html#khintchine-densities","transforms.html#characteristic-functions-twice","transforms.html#closing-the-canonical-loop","transforms.html#from-spectral-densities-to-background-driving-measures","recovery.html#recovery-from-the-imaginary-axis","recovery.html#inversion-backends","recovery.html#what-accuracy-to-expect","verification.html#the-identity-verifier","verification.html#resolved-ambiguities","verification.html#tolerances","cli.html#command-line-interface","cli.html#eval","cli.html#verify","cli.html#recover"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":19,",":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":6,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"7":{"docs":{},"df":0,"0":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,"7":{"docs":{},"df":0,"9":{"docs":{},"df":0,"4":{"docs":{},"df":0,"8":{"docs":{},"df":0,"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"19":{"tf":1.0}},"df":1},"4":{"docs":{"19":{"tf":1.0}},"df":1}},"1":{"docs":{"21":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,"3":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"3":{"docs":{"15":{"tf":1.0}},"df":1},"5":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"5":{"tf":1.0}},"df":6,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"28":{"tf":1.0}},"df":1}}}},":":{"docs":{},"df":0,"5":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}},"/":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1}},":":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"1":{"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.449489742783178},"15":{"tf":2.0},"16":{"tf":1.0},"19":{"tf":2.8284271247461903},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":11,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"+":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},",":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}},"0":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":2.0}},"df":10,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}},".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}},"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{"21":{"tf":1.4142135623730951}},"df":1},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"1":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"3":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"5":{"docs":{"20":{"tf":1.0}},"df":1,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"8":{"docs":{},"df":0,"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"5":{"docs":{},"df":0,"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"/":{"docs":{"16":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{"11":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"2":{"docs":{},"df":0,"x":{"docs":{},"df":0,"·":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"π":{"docs":{},"df":0,"x":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}},"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}},"2":{"docs":{"10":{"tf":1.0}},"df":1},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{"12":{"tf":1.0}},"df":1},"x":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}},"0":{"docs":{"10":{"tf":1.4142135623730951},"20":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4,"0":{"docs":{},"df":0,"ε":{"docs":{},"df":0,"·":{"docs":{},"df":0,"∫":{"docs":{},"df":0,"|":{"docs":{},"df":0,"f":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"1":{"docs":{"11":{"tf":1.0}},"df":1},"2":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":14,".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}}},"3":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0}},"df":3},"4":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3},"5":{"docs":{"15":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"7":{"docs":{"9":{"tf":1.0}},"df":1}}},"6":{"docs":{"21":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}},"df":2},"7":{"docs":{"25":{"tf":1.0}},"df":1},"8":{"docs":{"20":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2},"e":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":2.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":2.23606797749979},"27":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772},"8":{"tf":2.0}},"df":24,"1":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}},"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":2.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"25":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":9,")":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{"16":{"tf":1.0}},"df":1}}}}},",":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1},"4":{"docs":{"10":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"12":{"tf":1.7320508075688772},"16":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":7,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":3}}}}}}}},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}}}},"5":{"docs":{"5":{"tf":1.0}},"df":1,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"7":{"docs":{},"df":0,"0":{"docs":{},"df":0,"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,"4":{"docs":{},"df":0,"5":{"docs":{},"df":0,"4":{"docs":{},"df":0,"6":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,"7":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{},"df":0,"2":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"0":{"docs":{"7":{"tf":1.0}},"df":1},"c":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2},"e":{"docs":{"24":{"tf":1.0}},"df":1},"·":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}},"∫":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{},"df":0,"³":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{},"df":0,"²":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"′":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"d":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"3":{"docs":{"16":{"tf":1.0},"21":{"tf":1.4142135623730951},"25":{"tf":1.0},"28":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2},"2":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"3":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"5":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}},"0":{"docs":{"16":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"4":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":3.0},"24":{"tf":1.0},"28":{"tf":1.0}},"df":6,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"x":{"docs":{},"df":0,"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0}},"df":2},"1":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"3":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}},"8":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"5":{"docs":{"21":{"tf":2.449489742783178}},"df":1,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}},"6":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"0":{"docs":{"21":{"tf":1.0}},"df":1}},"7":{"docs":{"17":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"9":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}},"8":{"docs":{"16":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}},"–":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"20":{"tf":1.0}},"df":1}}}},"9":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"6":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}},"e":{"docs":{"21":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"28":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":19}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2,"g":{"docs":{"23":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":3}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"16":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1,"u":{"docs":{"0":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":4}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}},"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"k":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{"13":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}},"n":{"docs":{"18":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"v":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}},"v":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":7}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.7320508075688772}},"df":4,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}}}}}},"d":{"docs":{"25":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{"21":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":4}}}}}}},"e":{"docs":{"23":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"df":3},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}},"t":{"docs":{"25":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"5":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{"19":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}}},"c":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"28":{"tf":1.4142135623730951}},"df":3,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"’":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{"25":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":5}}},"s":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}},"’":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}}},"f":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{"26":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,",":{"docs":{},"df":0,"s":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":2.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.4142135623730951},"27":{"tf":1.7320508075688772}},"df":8,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{"25":{"tf":1.0}},"df":1,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":2.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"28":{"tf":1.0},"8":{"tf":1.0}},"df":11,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":2}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{"25":{"tf":1.0}},"df":1,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.0}},"df":4},"r":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.0}},"df":1}}}},"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"20":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0}},"df":1},"|":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}}}}}},"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.7320508075688772}},"df":1,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"h":{"docs":{"12":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"π":{"docs":{},"df":0,"x":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"π":{"docs":{},"df":0,"x":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":7,"e":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"v":{"docs":{"25":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"27":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1},"t":{"docs":{"8":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":3}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":2.0},"2":{"tf":1.0},"22":{"tf":1.0}},"df":7},"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}},":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0}},"df":1}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,",":{"docs":{},"df":0,"s":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":4}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}},"x":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"z":{"docs":{"8":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"26":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}},"k":{"docs":{"8":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}},"u":{"docs":{"12":{"tf":1.0}},"df":1},"x":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"1":{"docs":{},"df":0,"(":{"docs":{},"df":0,"−":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}},"^":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.7320508075688772}},"df":1},"x":{"docs":{"13":{"tf":1.0}},"df":1,"/":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0}},"df":1}}},"π":{"docs":{},"df":0,"|":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.0}},"df":1}}},"−":{"docs":{"23":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}},"x":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"}":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}},"π":{"docs":{},"df":0,"|":{"docs":{},"df":0,"x":{"docs":{},"df":0,"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"4":{"docs":{},"df":0,"}":{"docs":{},"df":0,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"π":{"docs":{},"df":0,"|":{"docs":{},"df":0,"x":{"docs":{},"df":0,"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"4":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}},"df":6}}},"i":{"docs":{"16":{"tf":1.0},"26":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"3":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1},"t":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"25":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"–":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.7320508075688772}},"df":1,"u":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":2.0},"2":{"tf":1.0},"25":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9}}},"e":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0}},"df":3},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":4}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"t":{"docs":{"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}}},"s":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"f":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0}},"df":2,"−":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}}}},"6":{"docs":{},"df":0,"4":{"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":8,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"’":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1},"w":{"docs":{"9":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"27":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":4}}},"v":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"x":{"docs":{"22":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"28":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":19},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1},"m":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":2.0},"2":{"tf":1.0},"22":{"tf":2.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":11,"a":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0},"27":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":7}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"27":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":9}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{"12":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"u":{"docs":{"12":{"tf":1.0}},"df":1}},")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"–":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.4142135623730951}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"h":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"–":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"h":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951}},"df":5}},"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"h":{"docs":{"18":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"27":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772}},"df":6,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"19":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"e":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"h":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}},"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}},"k":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":7}}}},"f":{"docs":{},"df":0,"f":{"docs":{"27":{"tf":1.0}},"df":1}},"m":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":4}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"28":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0}},"df":1},"|":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1},"|":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0},"8":{"tf":1.0}},"df":8,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"28":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"·":{"docs":{},"df":0,"(":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"₂":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"m":{"docs":{"0":{"tf":1.0}},"df":1},"r":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2},"t":{"docs":{"19":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"−":{"docs":{},"df":0,"i":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951}},"df":4}}}},"k":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"!":{"docs":{},"df":0,"/":{"docs":{},"df":0,"x":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0}},"df":1,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"13":{"tf":1.0}},"df":1,"[":{"docs":{},"df":0,"f":{"docs":{"13":{"tf":1.0}},"df":1},"m":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":2,"̂":{"docs":{},"df":0,"(":{"docs":{"19":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"5":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{"13":{"tf":1.0}},"df":1},"|":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1},"v":{"docs":{"21":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.7320508075688772}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}},"₂":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1},"z":{"docs":{"8":{"tf":1.0}},"df":1},"±":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{"21":{"tf":1.0}},"df":1}}}},"−":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"14":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"z":{"docs":{"8":{"tf":1.0}},"df":1}}}},"2":{"docs":{"4":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{"23":{"tf":1.4142135623730951}},"df":1,"−":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"m":{"docs":{"0":{"tf":2.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":2.0}},"df":5,"(":{"docs":{},"df":0,"d":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":19}},"k":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.0}},"df":11,"·":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"25":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":5}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":2.23606797749979}},"df":9,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"28":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"̂":{"docs":{},"df":0,"(":{"docs":{"0":{"tf":1.0}},"df":1,"1":{"docs":{"1":{"tf":1.0}},"df":1}},"_":{"docs":{"16":{"tf":1.0}},"df":1,"c":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2},"ψ":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}},"n":{"docs":{"18":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"g":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}},"n":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{"18":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":5}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":10,"c":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.7320508075688772},"21":{"tf":2.449489742783178},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.7320508075688772}},"df":6,"’":{"docs":{"21":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"df":5}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":2}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"h":{"docs":{"22":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"df":3}},"i":{"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"7":{"tf":2.449489742783178},"8":{"tf":1.4142135623730951}},"df":4,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}},"u":{"docs":{"15":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0}},"df":4}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}},"df":3,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"11":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"23":{"tf":2.0},"26":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"3":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"28":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"27":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.7320508075688772},"24":{"tf":1.0},"5":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}},"w":{"docs":{"21":{"tf":1.0}},"df":1}},"e":{"docs":{"20":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"d":{"docs":{"0":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2},"l":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6}},"c":{"docs":{"20":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"v":{"docs":{"1":{"tf":1.4142135623730951},"21":{"tf":1.0},"28":{"tf":2.23606797749979}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.0}},"df":1}},"v":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":5}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0},"27":{"tf":1.0}},"df":2},"2":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2},"3":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}}},"p":{"docs":{"17":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"27":{"tf":1.0},"9":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"’":{"docs":{"23":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"o":{"docs":{"20":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}},"w":{"docs":{"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"1":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{"11":{"tf":2.23606797749979},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":2.23606797749979},"20":{"tf":2.6457513110645907},"21":{"tf":1.7320508075688772},"23":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":2.0}},"df":9,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},",":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}},"e":{"docs":{"11":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"e":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0}},"df":2},"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"13":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"df":4,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"z":{"docs":{"2":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":6}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":7},"g":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"h":{"docs":{"13":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"π":{"docs":{},"df":0,"|":{"docs":{},"df":0,"x":{"docs":{},"df":0,"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"21":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{"25":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0},"28":{"tf":1.0}},"df":2}}}}},"m":{"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}}},"·":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{"0":{"tf":2.449489742783178},"1":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"19":{"tf":2.449489742783178},"20":{"tf":1.4142135623730951},"26":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":8,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":2.0}},"df":1}}}}}}}},",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.4142135623730951}},"df":1},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":4,"t":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"h":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0}},"df":5,"/":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0},"28":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":4}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}},"e":{"docs":{"6":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0}},"df":3,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}}}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}},"l":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"27":{"tf":1.0}},"df":3,"/":{"docs":{},"df":0,"3":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0}},"df":6}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0}},"df":10}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{"14":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"j":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}},"df":11}},"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"ζ":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}},"4":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"ζ":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}},"·":{"docs":{},"df":0,"[":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"β":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"ψ":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{"12":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.7320508075688772},"22":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"8":{"tf":2.0}},"df":19,"a":{"docs":{},"df":0,"g":{"docs":{"25":{"tf":1.0}},"df":1}}}},"v":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":5,"(":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0}},"df":4,"t":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}},"w":{"docs":{"19":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}}}},":":{"docs":{"26":{"tf":1.0}},"df":1,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,",":{"docs":{},"df":0,"s":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":8}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"f":{"docs":{"25":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":3,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"4":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}},"s":{"docs":{"22":{"tf":2.449489742783178},"24":{"tf":1.4142135623730951}},"df":2}},"w":{"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":2.6457513110645907},"19":{"tf":2.6457513110645907},"20":{"tf":1.0},"22":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":3}}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"25":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"’":{"docs":{"20":{"tf":1.0}},"df":1}}}},"·":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"x":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.7320508075688772},"15":{"tf":2.0},"16":{"tf":1.0},"18":{"tf":1.7320508075688772},"4":{"tf":2.0},"5":{"tf":1.7320508075688772},"6":{"tf":2.449489742783178}},"df":9,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"18":{"tf":1.0}},"df":1}}}},".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}},"+":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}},".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951}},"df":2}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"e":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}},"2":{"docs":{"5":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"k":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"·":{"docs":{},"df":0,"k":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.7320508075688772}},"df":1}}}}}},"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{},"df":0,"²":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"(":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}},"·":{"docs":{},"df":0,"h":{"docs":{},"df":0,"′":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"^":{"docs":{},"df":0,"k":{"docs":{},"df":0,"/":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"2":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":5}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":5}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"28":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{"7":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":6}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":6}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":4}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"title":{"root":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"28":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{"7":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"An analytic map V of the upper half-plane into the lower one admits a\\ncanonical integral form, and its restriction to the imaginary axis reads V(it) = a + ∫ (1 + itx)/(it − x) m(dx), t ≠ 0, with a real shift a and a finite non-negative measure m. Evaluating\\nat t = 1 gives V(i) = a − i·m(ℝ), so the shift and the total mass\\ncan be read off a single sample. The interesting question is the rest of m — and it turns out the values of V on the imaginary axis alone\\ndetermine the characteristic function m̂(s) = ∫ e^{isx} m(dx) through a\\none-line Laplace identity, L[m̂; w] = (i·V(−iw) − i·Re V(i) − w·Im V(i)) / (w² − 1), w > 0, which this crate inverts numerically with methods that only ever touch\\nthe real axis. No strip, contour, or half-plane values of V are\\nneeded. hyperfree implements this machinery for a concrete family: the free\\nanalogues of the hyperbolic characteristic functions 1/cosh t, t/sinh t, tanh t / t, together with the background-driving\\ncharacteristic function attached to the cosine member. For each of the\\nfour the crate carries the closed-form transform V(it) built from digamma, Nielsen beta,\\nHurwitz ζ(2,·), and dilogarithm evaluations, the density of the representing measure m, a closed form for m̂, and quadrature and inversion routes that recompute everything\\nindependently. Every identity relating these objects is machine-checked; the verifier chapter describes the registry and the two\\nplaces where a printed formula and the numerics disagree.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse hyperfree::transforms::{voiculescu_eval, extract_params, charfn_closed, FamilyMember};\\nuse hyperfree::recovery::{recover_charfn, InversionConfig}; let member = FamilyMember::CosineC; // shift and total mass from one sample of V\\nlet (shift, mass) = extract_params(|t| voiculescu_eval(member, t)).unwrap();\\nassert!(shift.abs() < 1e-12);\\nassert!((mass - (std::f64::consts::PI / 2.0 - 1.0)).abs() < 1e-12); // recover m̂(1) from imaginary-axis values of V only,\\n// then compare with the closed form\\nlet recovered = recover_charfn( &|t| voiculescu_eval(member, t), 1.0, &InversionConfig::default(),\\n).unwrap();\\nassert!((recovered.value - charfn_closed(member, 1.0)).abs() < 1e-4); }","breadcrumbs":"Introduction » Quick start","id":"1","title":"Quick start"},"10":{"body":"integrate_halfline(f, tol) integrates 0 → ∞ by geometric segments\\n[0,1], [1,2], [2,4], …, stopping once two consecutive segments\\ncontribute less than tol/32; the last contribution is carried as a tail\\nestimate. The integrands here all decay exponentially, so a dozen\\nsegments is the worst case. #![allow(unused)] fn main() {\\nuse hyperfree::quadrature::integrate_halfline;\\nuse std::f64::consts::PI; // ∫₀^∞ x/(1−e^{−x}) e^{−x} dx = ζ(2,1) = π²/6\\nlet r = integrate_halfline(|x| x / (-(-x).exp_m1()) * (-x).exp(), 1e-12);\\nassert!(r.converged);\\nassert!((r.value - PI * PI / 6.0).abs() < 1e-10); // ∫₀^∞ e^{−x/2}/(1+e^{−x}) dx = β(1/2) = π/2\\nlet r = integrate_halfline(|x| (-0.5 * x).exp() / (1.0 + (-x).exp()), 1e-12);\\nassert!((r.value - PI / 2.0).abs() < 1e-10); }","breadcrumbs":"Quadrature » Half-line integrals","id":"10","title":"Half-line integrals"},"11":{"body":"integrate_cos(f, s, tol) computes ∫₀^∞ cos(sx) f(x) dx. Segments\\nlonger than the oscillation scale are pre-split at the zeros of\\ncos(sx), so each panel sees at most one sign change; s = 0 reduces to\\nthe plain half-line routine. #![allow(unused)] fn main() {\\nuse hyperfree::quadrature::integrate_cos; // ∫₀^∞ cos(sx) e^{−x} dx = 1/(1+s²)\\nfor s in [0.0, 1.0, 12.0] { let r = integrate_cos(|x| (-x).exp(), s, 1e-12); assert!(r.converged); assert!((r.value - 1.0 / (1.0 + s * s)).abs() < 1e-11);\\n} }","breadcrumbs":"Quadrature » Cosine-weighted integrals","id":"11","title":"Cosine-weighted integrals"},"12":{"body":"convolve_halfline(f, g, x) evaluates (f ∗ g)(x) = ∫₀^x f(x−u) g(u) du\\nadaptively. The second factor may carry a removable singularity at 0⁺\\nas long as it is patched; the kernel 1/u − 2/(1−e^{−2u}) with limit −1\\nis the working example, and its convolution against cosh has the closed\\nform that the transform family’s sine member is assembled from. #![allow(unused)] fn main() {\\nuse hyperfree::quadrature::convolve_halfline;\\nuse std::f64::consts::PI; let x = 1.0f64;\\nlet got = convolve_halfline(|v| v.cosh(), |u| 2.0 / (1.0 + (-2.0 * u).exp()), x).unwrap();\\nlet want = 2.0 * x.sinh() * (PI / 4.0 - (-x).exp().atan()) - (-x).exp() + 1.0;\\nassert!((got - want).abs() < 1e-9); }","breadcrumbs":"Quadrature » Convolutions","id":"12","title":"Convolutions"},"13":{"body":"laplace_forward(f, w) computes L[f; w] = ∫₀^∞ f(x) e^{−wx} dx and\\nflags divergence when the damped integrand keeps growing through the\\nsegment budget — which is exactly the situation w at or below the\\nabscissa of convergence. #![allow(unused)] fn main() {\\nuse hyperfree::quadrature::laplace_forward; let w = 2.0f64;\\nlet l = laplace_forward(|x| x.sinh(), w).unwrap();\\nassert!((l - 1.0 / (w * w - 1.0)).abs() < 1e-9); // sinh grows like e^x: the transform only exists for w > 1\\nassert!(laplace_forward(|x| x.sinh(), 1.0).is_err()); }","breadcrumbs":"Quadrature » Forward Laplace transforms","id":"13","title":"Forward Laplace transforms"},"14":{"body":"FamilyMember enumerates the four transforms: member V(it)/i for t > 0 total mass CosineC 1 − t·β(t/2) π/2 − 1 SineS t·ψ(t/2) − t·ln(t/2) + 1 γ + ln 2 − 1 TangentT t·[ln(t/2) − β(t/2) − ψ(t/2)] π/2 − γ − ln 2 BdcfPsiC (t²/2)·ζ(2,t/2) − (t²/4)·ζ(2,t/4) + 1 2C − 1 Every transform is purely imaginary on the imaginary axis (the shift\\nparameter is zero), is extended to t < 0 by conjugate symmetry, and the\\ntangent member is by construction the difference of the first two. #![allow(unused)] fn main() {\\nuse hyperfree::transforms::{voiculescu_eval, FamilyMember}; for t in [0.5, 1.0, 3.0] { let c = voiculescu_eval(FamilyMember::CosineC, t).unwrap(); let s = voiculescu_eval(FamilyMember::SineS, t).unwrap(); let tt = voiculescu_eval(FamilyMember::TangentT, t).unwrap(); assert!(c.re.abs() < 1e-12); assert!((tt - (c - s)).norm() < 1e-13); // conjugate symmetry let minus = voiculescu_eval(FamilyMember::TangentT, -t).unwrap(); assert_eq!(minus, tt.conj());\\n} }","breadcrumbs":"The Transform Family » The Transform Family","id":"14","title":"The Transform Family"},"15":{"body":"Each member’s representing measure is absolutely continuous with an\\neven, exponentially decaying density: CosineC : ½·|x|/(1+x²) / sinh(π|x|/2)\\nSineS : |x|/(1+x²) / (e^{π|x|} − 1)\\nTangentT: ½·|x|/(1+x²) · e^{−π|x|/4}/cosh(π|x|/4)\\nBdcfPsiC: (π/4)·x²/(1+x²) · cosh(πx/2)/sinh²(πx/2) The origin values are the removable limits (1/π, 1/π, 0, 1/π), and the\\ncosine density splits exactly into sine plus tangent: #![allow(unused)] fn main() {\\nuse hyperfree::transforms::{khintchine_density, FamilyMember}; assert!((khintchine_density(FamilyMember::CosineC, 0.0) - 1.0 / std::f64::consts::PI).abs() < 1e-15);\\nfor x in [0.3, 1.0, 4.0] { let c = khintchine_density(FamilyMember::CosineC, x); let s = khintchine_density(FamilyMember::SineS, x); let t = khintchine_density(FamilyMember::TangentT, x); assert!((c - s - t).abs() < 1e-15);\\n} }","breadcrumbs":"The Transform Family » Khintchine densities","id":"15","title":"Khintchine densities"},"16":{"body":"charfn_closed evaluates the closed forms — for the cosine member 2 sinh(s)·arctan(e^{−s}) + (π/2)e^{−s} − 1, and analogous expressions\\nwith Ei, logarithms, and the dilogarithm for the others. s = 0 always\\nreturns the analytic limit (the total mass), even where individual\\nterms of the formula diverge. charfn_quadrature recomputes the same function as\\n2·∫₀^∞ cos(sx)·density(x) dx and shares no code with the closed forms\\nbeyond the special-function primitives. The two routes agreeing to\\n1e-8 across the family is the central cross-check of the crate: #![allow(unused)] fn main() {\\nuse hyperfree::transforms::{charfn_closed, charfn_quadrature, FamilyMember}; for member in FamilyMember::ALL { for s in [0.0, 0.5, 2.0] { let closed = charfn_closed(member, s); let quad = charfn_quadrature(member, s).unwrap(); assert!((closed - quad).abs() < 1e-8); } assert!((charfn_closed(member, 0.0) - member.reference_mass()).abs() < 1e-13);\\n} } One tail detail worth knowing: the sine density has a |x| cusp at the\\norigin, so m̂_S decays only like 1/s² (about 1.1e-3 at s = 30), while\\nthe cosine and tangent members decay exponentially in s up to that same\\n1/s² pair of terms cancelling between them.","breadcrumbs":"The Transform Family » Characteristic functions, twice","id":"16","title":"Characteristic functions, twice"},"17":{"body":"PickRepresentation packages (shift, total mass, density), and canonical_v_from_density pushes it through the canonical integral\\nnumerically. Applied to a member’s own density it must land back on the\\nclosed-form transform — the full representation loop: #![allow(unused)] fn main() {\\nuse hyperfree::transforms::{ canonical_v_from_density, voiculescu_eval, FamilyMember, PickRepresentation,\\n}; let rep = PickRepresentation::for_member(FamilyMember::SineS);\\nlet numeric = canonical_v_from_density(&rep, 2.0).unwrap();\\nlet closed = voiculescu_eval(FamilyMember::SineS, 2.0).unwrap();\\nassert!((numeric - closed).norm() < 1e-7); }","breadcrumbs":"The Transform Family » Closing the canonical loop","id":"17","title":"Closing the canonical loop"},"18":{"body":"For a spectral density h on (0,∞), the measure driving the associated\\nbackground process has Khintchine density\\nn(x) = −x²/(1+x²)·(h(x) + x·h′(x)). levy_to_bdcf_khintchine applies\\nthe map with a central-difference derivative (or an analytic one when\\nsupplied); fed the cosine member’s spectral density\\nk_C(x) = 1/(2x·sinh(πx/2)) it reproduces the BdcfPsiC density: #![allow(unused)] fn main() {\\nuse hyperfree::transforms::{khintchine_density, levy_to_bdcf_khintchine, FamilyMember}; let k_c = |x: f64| 0.5 / (x * (std::f64::consts::FRAC_PI_2 * x).sinh());\\nfor x in [0.5, 1.0, 2.0] { let n = levy_to_bdcf_khintchine(k_c, None, x).unwrap(); assert!((n - khintchine_density(FamilyMember::BdcfPsiC, x)).abs() < 1e-6);\\n} }","breadcrumbs":"The Transform Family » From spectral densities to background-driving measures","id":"18","title":"From spectral densities to background-driving measures"},"19":{"body":"The headline computation: given nothing but a black-box evaluator t ↦ V(it), produce the characteristic function of the representing\\nmeasure. Two observations make it work. First, the canonical form turns the Laplace transform of m̂ into an\\nexpression in V alone: L[m̂; w] = (i·V(−iw) − i·Re V(i) − w·Im V(i)) / (w² − 1). rhs_laplace_from_v evaluates the right side. At w = 1 numerator and\\ndenominator both vanish — finiteness of L[m̂; 1] forces the numerator to\\nzero for any evaluator of canonical form, which doubles as a\\nstructural test ( representation_residual); an evaluator failing it is\\nrejected. Inside |w − 1| < 1e-4 the quotient is interpolated from the\\nfour nodes 1 ± 0.02, 1 ± 0.04 to sidestep the cancellation. #![allow(unused)] fn main() {\\nuse hyperfree::recovery::{representation_residual, rhs_laplace_from_v};\\nuse hyperfree::transforms::{voiculescu_eval, FamilyMember};\\nuse hyperfree::Complex64; let v = |t: f64| voiculescu_eval(FamilyMember::TangentT, t);\\nassert!(representation_residual(&v).unwrap() < 1e-12);\\nassert!(rhs_laplace_from_v(&v, 2.0).unwrap() > 0.0); // V(it) = i·t² is analytic but not of canonical form: rejected\\nlet bogus = |t: f64| Ok(Complex64::new(0.0, t * t));\\nassert!(rhs_laplace_from_v(&bogus, 1.0).is_err()); } Second, the target of the inversion is bounded (|m̂| ≤ mass, abscissa\\nof convergence 0), which is what keeps real-axis inversion conditioned.\\nThe equivalent cosh-shifted form L[m̂(s) − mass·cosh(s); w] = Im V(iw) / (w² − 1), w > 1, grows like cosh and is kept only as a residual check\\n( verify_eq4_form).","breadcrumbs":"Recovery from the Imaginary Axis » Recovery from the Imaginary Axis","id":"19","title":"Recovery from the Imaginary Axis"},"2":{"body":"module contents specfun digamma, Nielsen beta, exponential integral, Hurwitz ζ(2,·), complex dilogarithm quadrature adaptive Gauss–Kronrod panels, half-line and cosine-weighted integrals, convolution, forward Laplace transforms the four members, densities, characteristic functions, canonical-form evaluation recovery the Laplace identity and real-axis inversion backends verify the identity registry and serializable reports The hyperfree binary exposes the same functionality on the command\\nline; see Command-Line Interface.","breadcrumbs":"Introduction » Layout","id":"2","title":"Layout"},"20":{"body":"recover_charfn(v, s, config) inverts the transform at s with one of\\ntwo backends that sample only real w: GaverStehfest — Gaver functionals with Salzer weights, the default,\\nat order 18; TalbotContourFree — the same Gaver functionals accelerated by\\nWynn’s rho algorithm instead; a deformed-contour method is impossible\\nhere because V is only known on the imaginary axis, and this is the\\nstandard contour-free alternative. Useful as a cross-check at orders\\naround 8–12. Each call also re-runs the inversion two orders lower and errors out\\nwith BackendUnstable if the two disagree by more than ten times the\\n1e-4 recovery target; s = 0 short-circuits to the mass −Im V(i). #![allow(unused)] fn main() {\\nuse hyperfree::recovery::{recover_charfn, InversionConfig};\\nuse hyperfree::transforms::{charfn_closed, voiculescu_eval, FamilyMember}; let member = FamilyMember::BdcfPsiC;\\nlet v = |t: f64| voiculescu_eval(member, t);\\nfor s in [0.0, 0.5, 1.5, 3.0] { let rec = recover_charfn(&v, s, &InversionConfig::default()).unwrap(); assert!((rec.value - charfn_closed(member, s)).abs() < 1e-4, \\"s = {s}\\"); assert!(rec.residual_at_one < 1e-10);\\n} }","breadcrumbs":"Recovery from the Imaginary Axis » Inversion backends","id":"20","title":"Inversion backends"},"21":{"body":"Gaver–Stehfest truncation on this family is governed by the complex\\nsingularities of m̂: the cosine and background-driving members have them\\nat distance π/2 from the real axis (arctan(e^{−s}), tanh, Li₂(±ie^s)),\\nso convergence slows as s grows. Measured maxima of |recovered − closed|\\nover s ∈ [0.1, 3], with exact weights at 60-digit precision: order CosineC SineS TangentT BdcfPsiC 12 4.3e-4 1.3e-4 5.2e-4 1.0e-3 14 1.2e-4 3.5e-5 1.5e-4 3.3e-4 16 3.2e-5 9.5e-6 4.1e-5 1.2e-4 18 7.9e-6 2.5e-6 1.0e-5 4.6e-5 This is why the default order is 18: it is the first even order whose\\nworst case clears 1e-4 with margin, while its ~1e11 weights still leave\\nthe f64 noise floor near 1e-5. It also means results at two different\\norders genuinely differ by the lower order’s truncation — orders 12 and\\n16 disagree by up to ~9e-4 near s ≈ 2 on the BDCF member, at any\\narithmetic precision. invert_laplace exposes the raw per-order\\ninversion for studying exactly this.","breadcrumbs":"Recovery from the Imaginary Axis » What accuracy to expect","id":"21","title":"What accuracy to expect"},"22":{"body":"verify::run_all executes a fixed registry of eight identity checks,\\neach comparing two computation paths that share nothing beyond the\\nspecial-function primitives, and assembles a VerificationReport that\\nserializes to JSON. Two consecutive runs with the same VerifyConfig\\nproduce byte-identical reports apart from the timestamp. id what is compared masses shift 0 and the four total masses from V(i) vs their closed constants appendixD i·log((1−ie^x)/(1+ie^x)) vs 2·arctan(e^x) prop3_split V, m̂, and density additivity of the tangent member remark1 cosine member: quadrature vs closed form remark2 sine member: quadrature vs closed form, plus a counter-check remark3 background-driving member: quadrature vs closed form corollary1 m̂_ψC̃ + m̂_C̃ vs ±2∫cos(tx)·x³/(1+x²)·k_C′(x)dx, both signs eq3_all both Laplace-identity forms for all members on the w grid #![allow(unused)] fn main() {\\nuse hyperfree::verify::{run_all, run_check, VerifyConfig}; let config = VerifyConfig::default();\\nlet report = run_all(&config);\\nassert!(report.overall_passed); // single checks run standalone, optionally with a grid override\\nlet check = run_check(\\"appendixD\\", &config, Some(&[-2.0, 0.0, 2.0])).unwrap();\\nassert!(check.passed && check.max_abs_error < 1e-12); }","breadcrumbs":"The Identity Verifier » The Identity Verifier","id":"22","title":"The Identity Verifier"},"23":{"body":"Two checks exist to adjudicate printed formulas that do not survive\\nnumerical scrutiny, and their verdicts ride along in the report’s sign_resolution field rather than being silently patched: remark2 — the sine member’s integral identity is sometimes printed\\nwith log(1+e^{s}) where the closed form needs log(1+e^{−s}). Since log(1+e^{s}) = s + log(1+e^{−s}), the printed variant is off by\\nexactly s·cosh(s); the check confirms the e^{−s} reading at 1e-8\\nand demonstrates the variant failing by orders of magnitude. corollary1 — the sum m̂_ψC̃ + m̂_C̃ equals\\n**−**2∫cos(tx)·x³/(1+x²)·k_C′(x)dx; the plus sign sometimes printed\\ncannot hold (k_C′ < 0 while both masses are positive). The check tests\\nboth signs, requires exactly one to pass at 1e-6, and records which. #![allow(unused)] fn main() {\\nuse hyperfree::verify::{run_check, VerifyConfig}; let corollary = run_check(\\"corollary1\\", &VerifyConfig::default(), None).unwrap();\\nassert!(corollary.passed);\\nassert!(corollary.sign_resolution.unwrap().starts_with(\\"minus\\")); }","breadcrumbs":"The Identity Verifier » Resolved ambiguities","id":"23","title":"Resolved ambiguities"},"24":{"body":"Defaults: 1e-8 for quadrature-vs-closed-form checks, 1e-4 for\\ninversion-vs-closed-form, 1e-12 for pure special-function identities\\n(the prop3_split, remark3, corollary1, and eq3_all checks carry\\nsmall documented multiples of these). In practice the registry lands\\nbetween 2e-16 and 1e-14 on the default grids, so there is four to eight\\norders of headroom; tightening tol_quad below ~1e-16 is the point\\nwhere failures appear and the report records them.","breadcrumbs":"The Identity Verifier » Tolerances","id":"24","title":"Tolerances"},"25":{"body":"The hyperfree binary exposes evaluation, verification, and recovery.\\nAll commands write CSV (default) or JSON to stdout or --out PATH;\\nCSV renders values with 17 significant digits, and the JSON envelope is {command, config, rows} with bit-identical numeric values. Exit codes are a stable contract for CI: code meaning 0 success 1 verification failure 2 usage error (unknown target/check, bad grid, invalid order) 3 numeric-domain or backend error Grids are written start:stop:step, inclusive of both endpoints within\\nhalf a step; plain comma lists also work. HYPERFREE_THREADS caps the\\nworker count for grid evaluation (results are identical at any thread\\ncount; only the wall time changes).","breadcrumbs":"Command-Line Interface » Command-Line Interface","id":"25","title":"Command-Line Interface"},"26":{"body":"# one row per point: argument, value\\nhyperfree eval charfn:C 0\\n# s,value\\n# 0.0000000000000000e0,5.7079632679489656e-1 # transforms print (t, re, im)\\nhyperfree eval V:S 1\\n# t,re,im\\n# 1.0000000000000000e0,0.0000000000000000e0,-2.7036284546147815e-1 # grids and JSON\\nhyperfree eval density:psiC --grid 0:4:0.5 --format json --out density.json Targets: digamma, beta, ei, zeta2, dilog_skew, V:{C,S,T,psiC}, density:{C,S,T,psiC}, charfn:{C,S,T,psiC}.","breadcrumbs":"Command-Line Interface » eval","id":"26","title":"eval"},"27":{"body":"# full registry; exit 0 iff everything passed\\nhyperfree verify --format json --out report.json # one check, tightened tolerance, custom grid\\nhyperfree verify --only remark1 --tol-quad 1e-10 --grid-s 0.5:5:0.5 The JSON report carries the config snapshot, one row per check with max_abs_error, tolerance, passed, and the sign_resolution\\nverdicts for the two ambiguity checks, plus overall_passed and a\\ntimestamp (the only field that differs between identical runs).","breadcrumbs":"Command-Line Interface » verify","id":"27","title":"verify"},"28":{"body":"# rows: s, recovered, closed, abs_error\\nhyperfree recover C --s 0.1:3:0.1 # the mass itself\\nhyperfree recover C --s 0 # alternative backend and order\\nhyperfree recover psiC --s 0.5,1,2 --order 10 --backend talbot-contour-free recover exits 3 when the inversion backend flags instability\\n(successive orders disagreeing by more than ten times the 1e-4 target).","breadcrumbs":"Command-Line Interface » recover","id":"28","title":"recover"},"3":{"body":"Everything in the crate reduces to five scalar primitives, each written\\nagainst an independent series or integral oracle in its tests. All of\\nthem are double precision with absolute accuracy targets of 1e-12 or\\nbetter on their working ranges.","breadcrumbs":"Special Functions » Special Functions","id":"3","title":"Special Functions"},"4":{"body":"digamma(x) computes ψ(x) = d/dx ln Γ(x) for x > 0 by the upward\\nrecurrence ψ(x+1) = ψ(x) + 1/x until the argument reaches 8, then a\\nseven-term asymptotic expansion in 1/x². Two values the rest of the\\ncrate leans on: #![allow(unused)] fn main() {\\nuse hyperfree::specfun::digamma;\\nuse hyperfree::constants::EULER_GAMMA; let ln2 = std::f64::consts::LN_2;\\nassert!((digamma(0.5).unwrap() - (-EULER_GAMMA - 2.0 * ln2)).abs() < 1e-12);\\nassert!((digamma(1.0).unwrap() - (-EULER_GAMMA)).abs() < 1e-12); }","breadcrumbs":"Special Functions » Digamma","id":"4","title":"Digamma"},"5":{"body":"nielsen_beta(x) is the alternating series β(x) = Σ (−1)^k/(x+k),\\nevaluated by the forward recurrence β(x) = 1/x − β(x+1) into the\\nasymptotic regime. It is also ½[ψ((x+1)/2) − ψ(x/2)] and the Laplace\\ntransform of the logistic function 1/(1+e^{−x}); both alternative routes\\nare exercised in tests, the first pointwise, the second by quadrature. #![allow(unused)] fn main() {\\nuse hyperfree::specfun::{digamma, nielsen_beta}; assert!((nielsen_beta(0.5).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);\\nassert!((nielsen_beta(1.0).unwrap() - std::f64::consts::LN_2).abs() < 1e-12); let x = 2.5;\\nlet via_digamma = 0.5 * (digamma((x + 1.0) / 2.0).unwrap() - digamma(x / 2.0).unwrap());\\nassert!((nielsen_beta(x).unwrap() - via_digamma).abs() < 1e-12); }","breadcrumbs":"Special Functions » Nielsen beta","id":"5","title":"Nielsen beta"},"6":{"body":"expint_ei(x) follows the classical three-regime scheme: the\\neverywhere-positive power series γ + ln x + Σ x^k/(k·k!) for\\n0 < x ≤ 30, the asymptotic expansion e^x/x · Σ k!/x^k truncated at its\\nsmallest term beyond that, and −E1(−x) for negative arguments (series\\nfor |x| ≤ 1, continued fraction otherwise). The origin is a logarithmic\\nsingularity and is rejected. #![allow(unused)] fn main() {\\nuse hyperfree::specfun::expint_ei;\\nuse hyperfree::constants::EULER_GAMMA; assert!((expint_ei(1.0).unwrap() - 1.8951178163559368).abs() < 1e-12);\\n// Ei(x) − ln x → γ as x → 0⁺\\nlet x = 1e-9;\\nassert!((expint_ei(x).unwrap() - x.ln() - EULER_GAMMA).abs() < 1e-8);\\nassert!(expint_ei(0.0).is_err()); }","breadcrumbs":"Special Functions » Exponential integral","id":"6","title":"Exponential integral"},"7":{"body":"hurwitz_zeta2(a) sums ζ(2, a) = Σ 1/(k+a)² directly until the\\nargument reaches 20 and finishes with the Euler–Maclaurin tail. The\\nquarter-integer values tie it to Catalan’s constant, which is how the\\nbackground-driving member’s mass arises. #![allow(unused)] fn main() {\\nuse hyperfree::specfun::hurwitz_zeta2;\\nuse hyperfree::constants::CATALAN;\\nuse std::f64::consts::PI; assert!((hurwitz_zeta2(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-12);\\nassert!((hurwitz_zeta2(0.5).unwrap() - PI * PI / 2.0).abs() < 1e-12);\\nassert!((hurwitz_zeta2(0.25).unwrap() - (PI * PI + 8.0 * CATALAN)).abs() < 1e-12); }","breadcrumbs":"Special Functions » Hurwitz zeta at s = 2","id":"7","title":"Hurwitz zeta at s = 2"},"8":{"body":"dilog(z) evaluates Li₂(z) = Σ z^k/k² anywhere in the plane: the\\ninversion functional equation maps |z| > 1 inside the disk, the\\nreflection equation moves Re z > ½ left of it, and what remains is a\\nfast Bernoulli series in −ln(1−z). The skew combination D(t) = i·(Li₂(i e^t) − Li₂(−i e^t)) is real for real t (the arguments are conjugates) and is what the\\nbackground-driving closed form consumes; dilog_skew computes it as\\n−2·Im Li₂(i e^t). #![allow(unused)] fn main() {\\nuse hyperfree::specfun::{dilog, dilog_skew};\\nuse hyperfree::constants::CATALAN;\\nuse hyperfree::Complex64;\\nuse std::f64::consts::PI; let li2_i = dilog(Complex64::new(0.0, 1.0));\\nassert!((li2_i.re - (-PI * PI / 48.0)).abs() < 1e-14);\\nassert!((li2_i.im - CATALAN).abs() < 1e-14); // D(0) = −2C, and for t < 0 the exponential series applies\\nassert!((dilog_skew(0.0) + 2.0 * CATALAN).abs() < 1e-13);\\nlet t = -1.0f64;\\nlet series: f64 = (1..40) .map(|k| { let m = 2.0 * k as f64 - 1.0; let sign = if k % 2 == 1 { -1.0 } else { 1.0 }; sign * (m * t).exp() / (m * m) }) .sum::<f64>() * 2.0;\\nassert!((dilog_skew(t) - series).abs() < 1e-12); }","breadcrumbs":"Special Functions » Complex dilogarithm","id":"8","title":"Complex dilogarithm"},"9":{"body":"Four integration shapes cover every integral in the crate. All of them\\nare built on one adaptive Gauss–Kronrod 15(7) refinement over an initial\\npartition, with the requested absolute tolerance floored at the rounding\\nlevel 100ε·∫|f| — the point below which further panel splitting cannot\\nhelp. A QuadratureResult reports the value, an error estimate, the number of\\nintegrand evaluations, and a converged flag. Removable singularities\\nare the caller’s contract: integrands arrive already patched with their\\nlimits at the boundary (panel nodes are interior, but an unpatched 0/0\\na few floats to the right of the endpoint would still hurt).","breadcrumbs":"Quadrature » Quadrature","id":"9","title":"Quadrature"}},"docInfo":{"0":{"body":158,"breadcrumbs":2,"title":1},"1":{"body":55,"breadcrumbs":3,"title":2},"10":{"body":73,"breadcrumbs":4,"title":3},"11":{"body":55,"breadcrumbs":4,"title":3},"12":{"body":65,"breadcrumbs":2,"title":1},"13":{"body":51,"breadcrumbs":4,"title":3},"14":{"body":88,"breadcrumbs":4,"title":2},"15":{"body":68,"breadcrumbs":4,"title":2},"16":{"body":112,"breadcrumbs":5,"title":3},"17":{"body":44,"breadcrumbs":5,"title":3},"18":{"body":60,"breadcrumbs":7,"title":5},"19":{"body":147,"breadcrumbs":6,"title":3},"2":{"body":56,"breadcrumbs":2,"title":1},"20":{"body":111,"breadcrumbs":5,"title":2},"21":{"body":131,"breadcrumbs":5,"title":2},"22":{"body":125,"breadcrumbs":4,"title":2},"23":{"body":87,"breadcrumbs":4,"title":2},"24":{"body":53,"breadcrumbs":3,"title":1},"25":{"body":81,"breadcrumbs":6,"title":3},"26":{"body":46,"breadcrumbs":4,"title":1},"27":{"body":54,"breadcrumbs":4,"title":1},"28":{"body":47,"breadcrumbs":4,"title":1},"3":{"body":24,"breadcrumbs":4,"title":2},"4":{"body":46,"breadcrumbs":3,"title":1},"5":{"body":56,"breadcrumbs":4,"title":2},"6":{"body":62,"breadcrumbs":4,"title":2},"7":{"body":51,"breadcrumbs":6,"title":4},"8":{"body":112,"breadcrumbs":4,"title":2},"9":{"body":59,"breadcrumbs":2,"title":1}},"length":29},"lang":"English"}}'));