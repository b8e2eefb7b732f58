"""Build the embedded English wordlist (data/english_words.txt).

The list is a detector, not a dictionary: generated vocabularies must avoid
accidental English, and candidate translations containing English words get
flagged.  It is assembled from a hand-picked base of very common lemmas plus
mechanical inflections (plural, verb -s/-ed/-ing, adjective -er/-est/-ly).
Overgenerated junk forms are harmless; the list is only ever used for
membership tests.  Run from the repository root:

    python3 tools/gen_english_wordlist.py
"""

from __future__ import annotations

from pathlib import Path

FUNCTION_WORDS = """
a about above across after again against ago ahead all almost alone along
already also although always am among an and another any anybody anymore
anyone anything anyway anywhere are around as at away back be because been
before behind being below beside besides between beyond both but by can
cannot certainly could definitely did do does doing done down during each
early either else enough even ever every everybody everyone everything
everywhere exactly except far few finally for forward from further had has
have having he her here hers herself him himself his how however i if in
indeed inside instead into is it its itself just later least less let like
likely many may maybe me meanwhile might mine more moreover most much must
my myself near nearly neither never nevertheless no nobody none nor not
nothing now nowhere of off often on once one only onto or other others
otherwise our ours ourselves out outside over past perhaps please probably
quite rarely rather really right said say she should since so some somebody
somehow someone something sometimes somewhere soon still such suddenly than
that the their theirs them themselves then there therefore these they this
those though through throughout thus till to today together tomorrow too
toward towards twice under unless until up upon us usually very was we well
were what whatever when whenever where whether which while who whom whose
why will with within without would yes yesterday yet you your yours yourself
yourselves
""".split()

NUMBERS = """
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty
fifty sixty seventy eighty ninety hundred thousand million billion first
second third fourth fifth sixth seventh eighth ninth tenth
""".split()

VERBS = """
accept add agree allow answer appear argue arrive ask avoid become begin
believe belong break bring build burn buy call care carry catch cause change
check choose claim clean climb close collect come compare complete consider
contain continue cook copy cost count cover create cross cry cut dance
decide deliver demand describe destroy develop die disagree discover discuss
divide draw dream drink drive drop earn eat enjoy enter escape expect
explain fail fall feed feel fight fill find finish fit fix fly fold follow
forget forgive form gain gather get give go grow guess handle happen hate
hear help hide hit hold hope hunt hurry hurt imagine improve include
increase intend invite join jump keep kill kiss know land laugh lay lead
learn leave lend lie lift listen live look lose love make manage mark marry
match matter mean measure meet mention miss mix move need notice obtain
occur offer open order own pass pay perform pick plan play point prefer
prepare present press pretend prevent produce promise protect prove provide
pull push put raise reach read realize receive recognize reduce refuse
remain remember remove repeat replace reply report require rest return ride
ring rise roll run save search see seem sell send serve set shake share
shine shoot shout show shut sing sit sleep smell smile sound speak spend
spread stand start stay steal stick stop study succeed suffer suggest
support suppose take talk taste teach tell test thank think throw touch
train translate travel treat trust try turn understand use visit vote wait
wake walk want warn wash waste watch wear welcome win wish wonder work worry
write
""".split()

IRREGULAR_FORMS = """
ate beaten became began begun bent bit bitten bled blew blown bore born
bought bound broke broken brought built burnt caught chose chosen clung came
crept dealt dug drank drawn dreamt drew driven drove drunk dug fallen fed
fell felt flew flown forbidden forgave forgiven forgot forgotten fought
found froze frozen gave given gone grew grown heard held hid hidden hung
kept knew known laid lain lay led left lent lit lost made meant met paid
ran rang ridden risen rode rose rung sang sank sat saw seen sent shaken
shone shook shot shown slept slid sold sought spent spoke spoken sprang
stolen stood stole struck stuck sung swam swept swum swung taken taught
thought threw thrown told took tore torn understood went wept woke woken
won wore worn wove woven wrote written
""".split()

NOUNS = """
ability action activity address advantage advice age agreement air airport
amount animal answer apartment apple area arm army art article attention
aunt autumn baby bag ball bank bath bathroom beach bear beauty bed bedroom
beer bell benefit bird birthday bit blood board boat body bone book bottle
bottom bowl box boy brain branch bread breakfast bridge brother building
bus business cake camera capital captain car card care case cat cause
center century chair chance change chapter character charge chest chicken
child choice church circle city class clock cloth cloud club coast coat
coffee color company computer condition control conversation corner country
couple course court cousin cow cup customer damage danger date daughter day
death decision degree desert design desk detail device dinner direction
distance doctor dog dollar door doubt dream dress drink driver duty ear
earth east edge effect effort egg end enemy energy engine evening event
evidence example exercise experience eye face fact failure fall family farm
father fear feature field fight figure film finger fire fish floor flower
food foot force forest form freedom friend front fruit function future game
garden gas gate gift girl glass goal god gold government grammar grass
ground group growth guest gun guy hair half hall hand head health heart
heat height help hill history hole holiday home hope horse hospital hotel
hour house human husband ice idea image industry information instance iron
island issue job judge juice key kind king kitchen knee knife knowledge
lady lake land language law leader leaf leg lesson letter level library
lie life light line lip list look lord loss lot love lunch machine magazine
man manner map mark market marriage material matter meal meaning measure
meat medicine meeting member memory message metal method middle milk mind
minute mirror mistake model moment money month moon morning mother mountain
mouse mouth move movie music name nation nature neck need neighbor news
newspaper night noise north nose note nothing notice number nurse object
ocean office officer oil opinion opportunity order page pain paint pair
paper parent park part party path patient pattern peace pen pencil people
percent period person phone photo picture piece pig place plan plane plant
plate play pleasure pocket point police position possibility pot power
practice president price problem process product profit program project
property public purpose quality quarter queen question radio rain range
rate reader reason record region relation religion report research respect
rest result return rice ring risk river road rock role roof room root rose
rule salt sand scale scene school science screen sea season seat second
secret section security sense sentence series service shadow shape share
ship shirt shoe shop shoulder side sign silver sister situation size skill
skin sky smile snow society soldier solution son song sort sound soup south
space speech speed spirit sport spot spring square staff stage star start
state station step stick stomach stone store storm story street strength
structure student study stuff style subject success sugar summer sun
support surface surprise symbol system table tail task taste tax tea
teacher team tear television temperature term test text theory thing
thought time tip title tooth top touch tour town toy trade tradition
traffic train translation tree trip trouble truck trust truth type uncle
unit university use valley value vegetable version video view village
visit voice wall war water wave way weakness wealth weather week weekend
weight west wife wind window wine winter woman wood word work worker world
writer yard year
""".split()

ADJECTIVES = """
able afraid alive amazing ancient angry available aware bad beautiful big
bitter black blind blue bored boring brave bright broad brown busy calm
capable careful central certain cheap clean clear clever cold comfortable
common complete cool correct crazy curious cute dangerous dark dead deaf
dear deep dirty dry dull easy effective empty equal exact excellent excited
expensive fair false famous fast fat favorite female final fine firm flat
foolish foreign formal free fresh friendly full funny general gentle glad
golden gray great green happy hard healthy heavy high hollow honest hot
huge hungry ill important impossible interesting international kind large
late lazy legal light little local lonely long loose loud low lucky mad
main major male mean military minor modern narrow national natural
necessary negative nervous new nice normal official old opposite orange
ordinary original particular patient perfect personal physical pink plain
pleasant polite poor popular positive possible powerful pretty private
proper proud public purple quick quiet rare raw ready real recent red
regular responsible rich rough round royal sad safe salty secret serious
severe shallow sharp short shy sick silent silly similar simple single
slow small smart smooth social soft sore sorry sour special square steep
straight strange strict strong stupid successful sure sweet tall terrible
thick thin thirsty tight tiny tired top total tough traditional true ugly
uncomfortable unfair unhappy unique unusual useful useless usual various
warm weak wet white whole wide wild wise wooden wrong yellow young
""".split()


def pluralize(noun: str) -> str:
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    return noun + "s"


def _doubles(stem: str) -> bool:
    return (
        len(stem) >= 3
        and stem[-1] not in "aeiouwxy"
        and stem[-2] in "aeiou"
        and stem[-3] not in "aeiou"
    )


def verb_forms(verb: str) -> set[str]:
    forms = {verb, pluralize(verb)}
    if verb.endswith("e"):
        forms |= {verb + "d", verb[:-1] + "ing"}
    elif verb.endswith("y") and verb[-2] not in "aeiou":
        forms |= {verb[:-1] + "ied", verb + "ing"}
    elif _doubles(verb):
        forms |= {verb + verb[-1] + "ed", verb + verb[-1] + "ing"}
    else:
        forms |= {verb + "ed", verb + "ing"}
    return forms


def adjective_forms(adj: str) -> set[str]:
    forms = {adj, adj + "ly"}
    if len(adj) <= 6:  # short adjectives take -er/-est
        if adj.endswith("e"):
            forms |= {adj + "r", adj + "st"}
        elif adj.endswith("y") and adj[-2] not in "aeiou":
            forms |= {adj[:-1] + "ier", adj[:-1] + "iest"}
        elif _doubles(adj):
            forms |= {adj + adj[-1] + "er", adj + adj[-1] + "est"}
        else:
            forms |= {adj + "er", adj + "est"}
    return forms


def build() -> list[str]:
    words: set[str] = set()
    words.update(FUNCTION_WORDS)
    words.update(NUMBERS)
    words.update(IRREGULAR_FORMS)
    for v in VERBS:
        words.update(verb_forms(v))
    for n in NOUNS:
        words.add(n)
        words.add(pluralize(n))
    for a in ADJECTIVES:
        words.update(adjective_forms(a))
    return sorted(words)


def main() -> None:
    words = build()
    out = Path(__file__).resolve().parent.parent / "src" / "scfgkit" / "data" / "english_words.txt"
    out.write_text("\n".join(words) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} words to {out}")


if __name__ == "__main__":
    main()
