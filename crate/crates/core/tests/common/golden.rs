//! Rows transcribed from the published approximant tables. `exact` is the
//! printed fraction where one is given; `decimal` is the printed decimal column.

pub struct Row {
    pub n: usize,
    pub exact: Option<&'static str>,
    pub decimal: &'static str,
}

pub const GAMMA: &[Row] = &[
    Row { n: 0, exact: Some("9/41"), decimal: "0.2195121951" },
    Row { n: 1, exact: Some("627726506/2084484569"), decimal: "0.3011423137" },
    Row { n: 2, exact: None, decimal: "0.3457225856" },
    Row { n: 3, exact: None, decimal: "0.3745360864" },
    Row { n: 4, exact: None, decimal: "0.3950172588" },
    Row { n: 5, exact: None, decimal: "0.4104941483" },
    Row { n: 6, exact: None, decimal: "0.4226993663" },
    Row { n: 7, exact: None, decimal: "0.4326321010" },
    Row { n: 8, exact: None, decimal: "0.4409129928" },
    Row { n: 9, exact: None, decimal: "0.4479499436" },
    Row { n: 10, exact: None, decimal: "0.4540232182" },
    Row { n: 11, exact: None, decimal: "0.4593324215" },
    Row { n: 12, exact: None, decimal: "0.4640239850" },
    Row { n: 13, exact: None, decimal: "0.4682080352" },
    Row { n: 14, exact: None, decimal: "0.4719691667" },
    Row { n: 15, exact: None, decimal: "0.4753735569" },
    Row { n: 17, exact: None, decimal: "0.4813123036" },
    Row { n: 19, exact: None, decimal: "0.4863363761" },
    Row { n: 21, exact: None, decimal: "0.4906573284" },
    Row { n: 23, exact: None, decimal: "0.4944242261" },
    Row { n: 25, exact: None, decimal: "0.4977454856" },
];

pub const DELTA: &[Row] = &[
    Row { n: 0, exact: Some("1/2"), decimal: "0.5000000000" },
    Row { n: 1, exact: Some("4/7"), decimal: "0.5714285714" },
    Row { n: 2, exact: Some("10/17"), decimal: "0.5882352941" },
    Row { n: 3, exact: Some("124/209"), decimal: "0.5933014354" },
    Row { n: 4, exact: Some("460/773"), decimal: "0.5950840880" },
    Row { n: 5, exact: Some("7940/13327"), decimal: "0.5957829969" },
    Row { n: 6, exact: Some("39020/65461"), decimal: "0.5960801088" },
    Row { n: 7, exact: Some("859580/1441729"), decimal: "0.5962146839" },
    Row { n: 8, exact: Some("748420/1255151"), decimal: "0.5962788541" },
    Row { n: 9, exact: Some("139931620/234662231"), decimal: "0.5963107885" },
    Row { n: 10, exact: Some("1015353820/1702678841"), decimal: "0.5963272671" },
    Row { n: 11, exact: Some("31805257340/53334454417"), decimal: "0.5963360400" },
    Row { n: 12, exact: Some("267257395340/448162154317"), decimal: "0.5963408395" },
    Row { n: 13, exact: Some("9591325648580/16083557845279"), decimal: "0.5963435293" },
    Row { n: 14, exact: Some("8317039567460/13946689584823"), decimal: "0.5963450693" },
    Row { n: 15, exact: Some("75451991521660/126523856174033"), decimal: "0.5963459683" },
    Row { n: 17, exact: Some("160957871380291180/269906478537389909"), decimal: "0.5963468245" },
    Row { n: 19, exact: Some("60588676286095139260/101599675414361566913"), decimal: "0.5963471442" },
    Row { n: 21, exact: Some("714785218276618032951940/1198605668577020653881647"), decimal: "0.5963472700" },
    Row { n: 23, exact: None, decimal: "0.5963473218" },
    Row { n: 25, exact: None, decimal: "0.5963473439" },
];

pub const ZETA2: &[Row] = &[
    Row { n: 0, exact: Some("4/3"), decimal: "1.333333333" },
    Row { n: 1, exact: Some("135/89"), decimal: "1.516853933" },
    Row { n: 2, exact: Some("505319/320733"), decimal: "1.575512966" },
    Row { n: 3, exact: Some("1337517425/835187004"), decimal: "1.601458618" },
    Row { n: 4, exact: Some("26920197674520019/16667096529827700"), decimal: "1.615170202" },
    Row { n: 5, exact: Some("4108034695656989506227/2530690380879633004100"), decimal: "1.623286170" },
    Row { n: 6, exact: None, decimal: "1.628483935" },
    Row { n: 7, exact: None, decimal: "1.632011765" },
    Row { n: 8, exact: None, decimal: "1.634515372" },
    Row { n: 9, exact: None, decimal: "1.636356043" },
    Row { n: 10, exact: None, decimal: "1.637748743" },
    Row { n: 11, exact: None, decimal: "1.638827873" },
    Row { n: 12, exact: None, decimal: "1.639680964" },
    Row { n: 13, exact: None, decimal: "1.640367005" },
    Row { n: 14, exact: None, decimal: "1.640926928" },
    Row { n: 15, exact: None, decimal: "1.641389854" },
    Row { n: 17, exact: None, decimal: "1.642103939" },
    Row { n: 19, exact: None, decimal: "1.642622098" },
    Row { n: 21, exact: None, decimal: "1.643009963" },
    Row { n: 23, exact: None, decimal: "1.643307821" },
    Row { n: 25, exact: None, decimal: "1.643541511" },
];

pub const ZETA3: &[Row] = &[
    Row { n: 0, exact: Some("8/7"), decimal: "1.142857143" },
    Row { n: 1, exact: Some("4887/4105"), decimal: "1.190499391" },
    Row { n: 2, exact: Some("13305034871/11102509809"), decimal: "1.198380826" },
    Row { n: 3, exact: Some("2196507603137550625/1829598054203124216"), decimal: "1.200541069" },
    Row { n: 4, exact: None, decimal: "1.201321520" },
    Row { n: 5, exact: None, decimal: "1.201657975" },
    Row { n: 6, exact: None, decimal: "1.201822087" },
    Row { n: 7, exact: None, decimal: "1.201909799" },
    Row { n: 8, exact: None, decimal: "1.201960105" },
    Row { n: 9, exact: None, decimal: "1.201990623" },
    Row { n: 10, exact: None, decimal: "1.202010004" },
    Row { n: 11, exact: None, decimal: "1.202022790" },
    Row { n: 12, exact: None, decimal: "1.202031499" },
    Row { n: 13, exact: None, decimal: "1.202037598" },
    Row { n: 14, exact: None, decimal: "1.202041971" },
    Row { n: 15, exact: None, decimal: "1.202045173" },
    Row { n: 17, exact: None, decimal: "1.202049371" },
    Row { n: 19, exact: None, decimal: "1.202051847" },
    Row { n: 21, exact: None, decimal: "1.202053385" },
    Row { n: 23, exact: None, decimal: "1.202054380" },
    Row { n: 25, exact: None, decimal: "1.202055046" },
];
