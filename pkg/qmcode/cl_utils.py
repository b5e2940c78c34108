#!/usr/bin/env python
# encoding: utf-8
"""
Documentation for qmcode can be found in the README and docs/ folder

Usage:
    qmcode init
    qmcode [options] reduce <word>
    qmcode [options] code <word>
    qmcode [options] wcode <word>
    qmcode [options] qm <word>
    qmcode [options] homogenise <word>
    qmcode [options] norm-bound <word>
    qmcode [options] generic <pattern>
    qmcode [options] apply-aut <automorphism> <word>
    qmcode [options] commutator <automorphism> <word>
    qmcode [options] witness <pattern>
    qmcode [options] probe <pattern>...
    qmcode [options] witness-scl [<n>...]
    qmcode [options] verify-defect
    qmcode [options] verify-invariance
    qmcode [options] scl-bound

Options:
    init                                   setup the qmcode settings file for the first time
    reduce                                 print the reduced form of a word
    code                                   print the code of a word on one side
    wcode                                  print the weighted ℤ-code of a word on an integer side
    qm                                     evaluate a quasimorphism spec on a word
    homogenise                             certified interval for the homogenisation of a quasimorphism at a word
    norm-bound                             lower bound for the word norm from a quasimorphism value
    generic                                decide whether a pattern is generic
    apply-aut                              apply an automorphism (generator word) to a word
    commutator                             the aut-commutator [φ, w] = φ(w)·w⁻¹
    witness                                build the witness word of a generic pattern and check f(w^ℓ) = ℓ
    probe                                  linear-independence probe: earlier patterns vanish on a fresh witness
    witness-scl                            commutator witness, its homogenisation and the certified scl_Aut bound
    verify-defect                          sampled defect campaign against the a-priori bound
    verify-invariance                      sampled invariance campaign under generators of Aut(A∗B)
    scl-bound                              certified scl bound from a value, its error and a defect

    word                                   a word such as "a^2 b a b a^-1" (letters a, b, a[k], b[name])
    pattern                                a tuple of positive integers such as "(1,2,3)"
    automorphism                           generators separated by spaces or ';' e.g. "fauto:A:mul:2 pconj:B:1"
    n                                      the exponents n₁ … n_ℓ of the commutator witness

    -h, --help                             show this help message
    -v, --version                          show version
    -s, --settings <pathToSettingsFile>    the settings file
    -c, --config <groupConfig>             group config file, or the name of a bundled config (e.g. z5_z2)
    --side <side>                          the side A or B
    --spec <qmSpec>                        quasimorphism spec, e.g. "code:A:(1,2)"
    --power <N>                            the homogenisation power N
    --trials <trials>                      number of sampled trials
    --seed <seed>                          campaign seed (printed when drawn fresh)
    --max-len <length>                     maximum sampled word length
    --kinds <kinds>                        comma separated generator kinds (fauto,pconj,swap,transv)
    --mode <mode>                          witness mode: code-distinct, code-isomorphic or weighted
    --tail <m>                             the tail entry m of the witness for odd-length patterns
    --powers <powers>                      check witness powers ℓ = 1..powers
    --fresh <pattern>                      the fresh pattern of the linear-independence probe
    --value <value>                        homogenised value for scl-bound
    --error <error>                        homogenisation error bound for scl-bound
    --defect <defect>                      defect bound for scl-bound and norm-bound
    --letter-bound <K>                     bound on |f| over single letters for norm-bound
    --subadditivity                        check |θ(w₁w₂) − θ(w₁) − θ(w₂)| ≤ 2 instead of the defect
    -m, --machine                          write a machine-readable YAML report
"""
################# GLOBAL IMPORTS ####################
import sys
import os
from docopt import docopt, DocoptExit
from fundamentals import tools, times
from subprocess import Popen, PIPE, STDOUT
from qmcode.__version__ import __version__
from qmcode.commonutils.errors import QmcodeError, UsageError
from qmcode.commonutils.toolkit import get_setting, parse_fraction
from qmcode.commonutils.parser import load_config, parse_word, format_word, parse_pattern, parse_qm_spec, parse_automorphism, format_pattern
from qmcode.commonutils.words import reduce, power
from qmcode.commonutils.codes import code, weighted_z_code, is_generic, format_code
from qmcode.commonutils.group_config import check_side
from qmcode.commonutils.quasimorphisms import evaluate, homogenise, homogenisation_estimate, a_priori_defect, letter_bound
from qmcode.commonutils.automorphisms import aut_commutator
from qmcode.verify.reports import campaign_report, dump_document, render_campaign, render_document, render_homogenisation


def emit_report(
        report,
        machine=False):
    """*format a campaign report or a result document for output*

    **Key Arguments:**
        - ``report`` -- a `campaign_report` or a result dictionary carrying a `report` type and an optional `text` rendering
        - ``machine`` -- write the versioned YAML document instead of text. Default *False*

    **Return:**
        - ``output`` -- the formatted string
    """
    if isinstance(report, campaign_report):
        return dump_document(report.to_document()) if machine else render_campaign(report)
    doc = dict(report)
    text = doc.pop("text", None)
    if machine:
        return dump_document(doc)
    return text if text is not None else render_document(doc)


def _config(log, a, settings):
    if not a["configFlag"]:
        raise UsageError("this command needs a group config: pass -c/--config")
    return load_config(log=log, pathOrName=a["configFlag"], maxOrder=int(get_setting(settings, "max-table-order")))


def _qm(a, config):
    if not a["specFlag"]:
        raise UsageError("this command needs a quasimorphism: pass --spec")
    return parse_qm_spec(a["specFlag"]).validate(config)


def _side(a, default="A"):
    if not a["sideFlag"]:
        return default
    return check_side(a["sideFlag"])


def _word(a, config, settings):
    return reduce(parse_word(a["word"], config, maxLetters=int(get_setting(settings, "max-word-letters"))))


def _int(value, name):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{name} must be an integer, not `{value}`")


def _dispatch(log, a, settings):
    """*run one verb and return its report*"""
    if a["reduce"]:
        config = _config(log, a, settings)
        w = _word(a, config, settings)
        return {"report": "reduce", "config": config.name, "input": a["word"], "word": format_word(w), "length": len(w), "text": format_word(w)}

    if a["code"] or a["wcode"]:
        config = _config(log, a, settings)
        side = _side(a)
        w = _word(a, config, settings)
        c = weighted_z_code(w, side) if a["wcode"] else code(w, side)
        return {"report": "wcode" if a["wcode"] else "code", "config": config.name, "side": side, "word": format_word(w), "code": list(c), "text": format_code(c)}

    if a["qm"]:
        config = _config(log, a, settings)
        q = _qm(a, config)
        w = _word(a, config, settings)
        value = evaluate(q, w)
        return {"report": "qm", "config": config.name, "qm": q.spec(), "word": format_word(w), "value": value, "text": str(value)}

    if a["homogenise"]:
        config = _config(log, a, settings)
        q = _qm(a, config)
        w = _word(a, config, settings)
        N = _int(a["powerFlag"] or get_setting(settings, "homogenisation.power"), "--power")
        estimate = homogenise(log=log, q=q, w=w, N=N)
        doc = _homogenisation_document(q, w, estimate)
        doc["config"] = config.name
        doc["text"] = render_homogenisation(doc)
        return doc

    if a["norm-bound"]:
        from qmcode.verify.bounds import norm_lower_bound
        config = _config(log, a, settings)
        q = _qm(a, config)
        w = _word(a, config, settings)
        value = evaluate(q, w)
        K = parse_fraction(a["letter-boundFlag"]) if a["letter-boundFlag"] else letter_bound(q)
        D = parse_fraction(a["defectFlag"]) if a["defectFlag"] else a_priori_defect(q)
        bound = norm_lower_bound(value, K, D)
        return {"report": "norm-bound", "qm": q.spec(), "word": format_word(w), "value": value, "letter_bound": K, "defect": D, "norm_lower_bound": bound,
                "text": f"‖w‖ ≥ |f(w)|/(K+D) = {abs(value)}/({K}+{D}) = {bound}"}

    if a["generic"]:
        z = parse_pattern(a["pattern"][0])
        generic = is_generic(z)
        verdict = "generic" if generic else f"not generic (its reversal {format_pattern(z[::-1])} occurs in z·z)"
        return {"report": "generic", "pattern": list(z), "generic": generic, "text": f"{format_pattern(z)} is {verdict}"}

    if a["apply-aut"] or a["commutator"]:
        config = _config(log, a, settings)
        phi = parse_automorphism(a["automorphism"], config)
        w = _word(a, config, settings)
        result = phi.apply(w) if a["apply-aut"] else aut_commutator(phi, w)
        return {"report": "apply-aut" if a["apply-aut"] else "commutator", "config": config.name, "automorphism": phi.spec(), "word": format_word(w), "result": format_word(result), "text": format_word(result)}

    if a["witness"]:
        from qmcode.verify.witness_words import default_witness_spec, check_witness_growth, witness_word
        config = _config(log, a, settings)
        side = _side(a)
        mode = a["modeFlag"] or (
            "weighted" if config.factor(side).kind == "integer" else "code-distinct")
        z = parse_pattern(a["pattern"][0])
        m = _int(a["tailFlag"], "--tail") if a["tailFlag"] else None
        spec = default_witness_spec(config, z, mode, side, m)
        powers = _int(a["powersFlag"] or get_setting(settings, "witness.powers"), "--powers")
        rows = check_witness_growth(log=log, spec=spec, config=config, powers=powers)
        w = witness_word(spec, config)
        q = spec.qm()
        text = "\n".join([
            f"w = {format_word(w)}",
            f"quasimorphism: {q.spec()}",
            f"f(w^ℓ) = {spec.growth()}·ℓ exactly for ℓ = 1..{powers}"
        ])
        return {"report": "witness", "config": config.name, "mode": mode, "side": spec.side, "pattern": list(spec.z), "m": spec.m,
                "word": format_word(w), "qm": q.spec(), "rows": [{"power": l, "value": v} for l, v in rows], "text": text}

    if a["probe"]:
        from qmcode.verify.witness_words import linear_independence_probe
        config = _config(log, a, settings)
        side = _side(a)
        mode = a["modeFlag"] or (
            "weighted" if config.factor(side).kind == "integer" else "code-distinct")
        patterns = [parse_pattern(p) for p in a["pattern"]]
        fresh = parse_pattern(a["freshFlag"]) if a["freshFlag"] else None
        powers = _int(a["powersFlag"] or 20, "--powers")
        probe = linear_independence_probe(log=log, config=config, patterns=patterns, fresh=fresh, mode=mode, side=side, powers=powers)
        from tabulate import tabulate
        table = tabulate([[r["power"]] + [str(v) for v in r["earlier"]] + [str(r["fresh"])] for r in probe["rows"]],
                         headers=["ℓ"] + probe["earlier_qms"] + [probe["fresh_qm"]], tablefmt="simple")
        text = f"fresh pattern {format_pattern(probe['fresh'])}, witness w = {format_word(probe['word'])}\n{table}\nthe earlier quasimorphisms vanish on every tested power of w"
        return {"report": "probe", "config": config.name, "mode": mode, "side": probe["side"], "patterns": [list(z) for z in probe["patterns"]],
                "fresh": list(probe["fresh"]), "m": probe["m"], "word": format_word(probe["word"]), "earlier_qms": probe["earlier_qms"],
                "fresh_qm": probe["fresh_qm"], "rows": [{"power": r["power"], "earlier": r["earlier"], "value": r["fresh"]} for r in probe["rows"]], "text": text}

    if a["witness-scl"]:
        from qmcode.verify.commutator_witness import witness_commutator_word
        from qmcode.verify.bounds import scl_lower_bound
        config = _config(log, a, settings)
        nList = [_int(n, "n") for n in a["n"]] or list(get_setting(settings, "witness-scl.n-list"))
        N = _int(a["powerFlag"] or get_setting(settings, "witness-scl.power"), "--power")
        w, q, derivation = witness_commutator_word(log=log, config=config, nList=nList, side=_side(a, default=None))
        estimate = homogenise(log=log, q=q, w=w, N=N)
        bound = scl_lower_bound(estimate, estimate.defect)
        doc = _homogenisation_document(q, w, estimate)
        doc.update({"report": "witness-scl", "config": config.name, "code": list(code(w, derivation["side"])),
                    "derivation": derivation, "scl_lower_bound": bound})
        doc["text"] = _render_witness_scl(doc)
        return doc

    if a["verify-defect"]:
        from qmcode.verify.estimate_defect import estimate_defect, estimate_theta_subadditivity
        config = _config(log, a, settings)
        q = _qm(a, config)
        worker = estimate_theta_subadditivity if a["subadditivityFlag"] else estimate_defect
        return worker(log=log, q=q, config=config, settings=settings, trials=a["trialsFlag"] and _int(a["trialsFlag"], "--trials"),
                      seed=a["seedFlag"], maxLength=a["max-lenFlag"] and _int(a["max-lenFlag"], "--max-len")).get()

    if a["verify-invariance"]:
        from qmcode.verify.check_invariance import check_invariance
        config = _config(log, a, settings)
        q = _qm(a, config)
        kinds = [k.strip() for k in a["kindsFlag"].split(",") if k.strip()] if a["kindsFlag"] else None
        return check_invariance(log=log, q=q, config=config, kinds=kinds, settings=settings, trials=a["trialsFlag"] and _int(a["trialsFlag"], "--trials"),
                                seed=a["seedFlag"], maxLength=a["max-lenFlag"] and _int(a["max-lenFlag"], "--max-len")).get()

    if a["scl-bound"]:
        from qmcode.verify.bounds import scl_lower_bound
        if not (a["valueFlag"] and a["errorFlag"] and a["defectFlag"]):
            raise UsageError("scl-bound needs --value, --error and --defect")
        estimate = homogenisation_estimate(value=parse_fraction(a["valueFlag"]), error_bound=parse_fraction(a["errorFlag"]),
                                           N=None, defect=parse_fraction(a["defectFlag"]))
        bound = scl_lower_bound(estimate, estimate.defect)
        return {"report": "scl-bound", "value": estimate.value, "error_bound": estimate.error_bound, "defect": estimate.defect,
                "scl_lower_bound": bound, "text": f"scl_Aut(w) ≥ {bound}"}

    raise UsageError("no command given")


def _homogenisation_document(q, w, estimate):
    lower, upper = estimate.interval()
    return {"report": "homogenisation", "qm": q.spec(), "word": format_word(w), "N": estimate.N, "value": estimate.value,
            "error_bound": estimate.error_bound, "lower": lower, "upper": upper, "defect": estimate.defect}


def _render_witness_scl(doc):
    derivation = doc["derivation"]
    lines = [
        f"w = {doc['word']}",
        f"code on side {derivation['side']}: {format_code(doc['code'])}",
        f"quasimorphism: {doc['qm']}",
        f"membership in [Aut(G), G] ({derivation['case']}, f = {derivation['automorphism']} on {derivation['side']}):"
    ]
    for entry in derivation["factors"]:
        lines.append(
            f"    {entry['name']} = {entry['commutator']} = [{entry['automorphism']}, {entry['argument']}] = {entry['result']}")
    lines.append(f"    {derivation['product']}")
    lines.append(render_homogenisation(doc))
    lines.append(f"scl_Aut(w) ≥ {doc['scl_lower_bound']}")
    return "\n".join(lines)


def run(
        argv=None,
        stdout=None,
        stderr=None):
    """
    *run one qmcode command and return its exit code (0 success, 1 domain error, 2 usage error)*

    **Key Arguments:**
        - ``argv`` -- the argument vector without the program name. Default *None* (`sys.argv[1:]`)
        - ``stdout`` -- stream for results. Default *sys.stdout*
        - ``stderr`` -- stream for errors. Default *sys.stderr*

    **Usage:**

    ```python
    from qmcode.cl_utils import run
    run(["--config", "z5_z2", "code", "--side", "A", "a^2 b a b a b a^4 b a b a"])
    ```
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        arguments = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as e:
        stderr.write(f"error {UsageError.code}: invalid usage\n{e}\n")
        return UsageError.exitCode
    except SystemExit:
        # --help AND --version
        return 0

    # setup the command-line util settings
    # fundamentals `exec`s each argument name, so hyphenated commands
    # (e.g. norm-bound) are passed to it under identifier-safe keys
    toolsArguments = {(k if k[0] == "-" else k.replace("-", "_")): v for k, v in arguments.items()}
    su = tools(
        arguments=toolsArguments,
        docString=__doc__,
        logLevel="WARNING",
        options_first=False,
        projectName="qmcode",
        defaultSettingsFile=True
    )
    _, settings, log, dbConn = su.setup()

    # UNPACK REMAINING CL ARGUMENTS INTO VARIABLE NAMES
    a = {}
    for arg, val in list(arguments.items()):
        if arg[0] == "-":
            varname = arg.replace("-", "", 2) + "Flag"
        else:
            varname = arg.replace("<", "").replace(">", "")
        a[varname] = val
        log.debug('%s = %s' % (varname, val,))

    ## START LOGGING ##
    startTime = times.get_now_sql_datetime()
    log.info(
        '--- STARTING TO RUN THE cl_utils.py AT %s' %
        (startTime,))

    if a["init"]:
        from os.path import expanduser
        home = expanduser("~")
        filepath = home + "/.config/qmcode/qmcode.yaml"
        try:
            cmd = """open %(filepath)s""" % locals()
            p = Popen(cmd, stdout=PIPE, stderr=PIPE, shell=True)
        except:
            pass
        try:
            cmd = """start %(filepath)s""" % locals()
            p = Popen(cmd, stdout=PIPE, stderr=PIPE, shell=True)
        except:
            pass
        stdout.write(f"settings file: {filepath}\n")
        return 0

    try:
        report = _dispatch(log, a, settings)
    except QmcodeError as e:
        log.debug(f"command failed: {e}")
        stderr.write(f"error {e}\n")
        return e.exitCode

    output = emit_report(report, machine=a["machineFlag"])
    stdout.write(output if output.endswith("\n") else output + "\n")

    ## FINISH LOGGING ##
    endTime = times.get_now_sql_datetime()
    runningTime = times.calculate_time_difference(startTime, endTime)
    log.info('-- FINISHED ATTEMPT TO RUN THE cl_utils.py AT %s (RUNTIME: %s) --' %
             (endTime, runningTime, ))

    return 0


def main(arguments=None):
    """
    *The main function used when `cl_utils.py` is run as a single script from the cl, or when installed as a cl command*
    """
    sys.exit(run(argv=arguments))


if __name__ == '__main__':
    main()
