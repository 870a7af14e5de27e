# -*- coding: utf-8 -*-
""" Lower and upper bounds on K_q^RT(m,s,R) and OCAN(t,m,s,v) with their
provenance.

Every applicable rule adds an Entry to the chain of a BoundRecord; the
record keeps the best lower and upper values and the rules reaching them.
Constructive entries carry a factory, BoundRecord.witness() builds and
verifies the first one among the rules tied for the upper bound.
"""
import csv
import io
import json
import os
from collections import namedtuple
from logging import getLogger

import numpy as np

from .codes import constant_code
from .codes import lift_hamming_to_rt
from .codes import product_code
from .codes import surjective_hamming_code
from .codes import three_chain_code
from .codes import trivial_covering
from .codes import two_chain_code
from .codes import verified_code
from .codes import verify_covering
from .constructions import DROP_BOTTOM_LEVEL
from .constructions import extend_depth
from .constructions import fused_oca_for
from .constructions import kleitman_spencer_ca
from .constructions import kleitman_spencer_number
from .constructions import oca_depth2_from_ca
from .constructions import ooa_for
from .constructions import restrict
from .designs import OrderedArray
from .designs import check_oca_parameters
from .designs import verified
from .designs import verify_oca
from .errors import FormatError
from .errors import InvalidArgumentError
from .errors import RTCoverError
from .errors import ResourceLimitError
from .fields import is_supported_order
from .fields import prime_power
from .files import read_witness
from .files import write_array
from .files import write_code
from .log_msg import LogMsg
from .metric import DEFAULT_POINT_BUDGET
from .metric import digits
from .metric import sphere_volume
from .poset import RTPoset
from .search import exact_covering_number
from .search import exact_ocan


_LOG = getLogger(__name__)

KIND_K = "K"
KIND_OCAN = "OCAN"

LOWER = "lower"
UPPER = "upper"
EXACT = "exact"

K_RULES = (
    "sphere", "constant-code", "trivial", "teo1", "twochains-1",
    "twochains-2", "corol4-2", "teoca", "corol4-3", "corol5-1", "corol5-2",
    "corol5-3", "teoca-cor-1", "search")
OCAN_RULES = (
    "trivial-lower", "full-space", "kleitman-spencer", "ooa", "fusion",
    "ca-file", "depth-transfer", "search")

_PARAM_NAMES = {
    KIND_K: ("q", "m", "s", "R"),
    KIND_OCAN: ("t", "m", "s", "v"),
}

Entry = namedtuple(
    "Entry", ["rule", "cited", "params", "value", "side", "constructive"])


def _ceil_div(a, b):
    return -(-a // b)


def _factor_pairs(n):
    """ (a, b) with a * b = n and a, b >= 2, a ascending. """
    return [(a, n // a) for a in range(2, n // 2 + 1)
            if n % a == 0 and n // a >= 2]


def _is_prime_power(n):
    return prime_power(n) is not None


class BoundRecord(object):
    """ Bounds on one target with the chain of rules that produced them.
    """

    def __init__(self, kind, params, chain, factories=None):
        """
        :param kind: KIND_K or KIND_OCAN
        :param params: (q, m, s, R) or (t, m, s, v)
        :type chain: [Entry]
        :param factories: chain index -> callable building the witness of a
            constructive entry
        """
        self._kind = kind
        self._params = tuple(params)
        self._chain = list(chain)
        self._factories = factories or {}
        self._witness = None
        lows = [e for e in self._chain if e.side in (LOWER, EXACT)]
        highs = [e for e in self._chain if e.side in (UPPER, EXACT)]
        self._lower = max(e.value for e in lows)
        self._upper = min(e.value for e in highs)
        if self._lower > self._upper:
            raise RuntimeError("Inconsistent bounds for {}: {} > {}.".format(
                self.target, self._lower, self._upper))

    @property
    def kind(self):
        return self._kind

    @property
    def params(self):
        return self._params

    @property
    def target(self):
        return "{}({})".format(
            self._kind, ",".join(str(p) for p in self._params))

    @property
    def chain(self):
        return list(self._chain)

    @property
    def lower(self):
        return self._lower

    @property
    def upper(self):
        return self._upper

    @property
    def exact(self):
        return self._lower == self._upper

    def _tied(self, sides, value):
        return [e for e in self._chain if e.side in sides and e.value == value]

    @property
    def lower_rules(self):
        return [e.rule for e in self._tied((LOWER, EXACT), self._lower)]

    @property
    def upper_rules(self):
        return [e.rule for e in self._tied((UPPER, EXACT), self._upper)]

    @property
    def constructive(self):
        """ True iff some rule reaching the upper bound has a construction.
        """
        return any(e.constructive
                   for e in self._tied((UPPER, EXACT), self._upper))

    def witness(self):
        """ The verified object realising the upper bound, built by the
        first constructive rule among the tied ones; None for records
        without a construction.

        :rtype: OrderedArray or Code or None
        """
        if self._witness is None:
            for index, entry in enumerate(self._chain):
                if (entry.side in (UPPER, EXACT) and
                        entry.value == self._upper and entry.constructive and
                        index in self._factories):
                    self._witness = self._check(self._factories[index]())
                    _LOG.info(LogMsg(
                        "Witness of {} from rule {}: {}.", self.target,
                        entry.rule, self._witness))
                    break
        return self._witness

    def _check(self, witness):
        if isinstance(witness, OrderedArray):
            return verified(witness)
        return verified_code(witness)

    def to_dict(self):
        return {
            "kind": self._kind,
            "params": dict(zip(_PARAM_NAMES[self._kind], self._params)),
            "lower": self._lower,
            "lower_rules": self.lower_rules,
            "upper": self._upper,
            "upper_rules": self.upper_rules,
            "exact": self.exact,
            "constructive": self.constructive,
            "chain": [e._asdict() for e in self._chain],
        }

    @staticmethod
    def from_dict(data):
        """ Rebuild a record (without witness factories) from to_dict(). """
        kind = data["kind"]
        params = [data["params"][name] for name in _PARAM_NAMES[kind]]
        chain = [Entry(**entry) for entry in data["chain"]]
        return BoundRecord(kind, params, chain)

    def __repr__(self):
        return "BoundRecord({}: [{}, {}])".format(
            self.target, self._lower, self._upper)


class _Chain(object):
    """ Collects the entries and factories of one record. """

    def __init__(self):
        self.entries = []
        self.factories = {}

    def add(  # pylint: disable=too-many-arguments
            self, rule, cited, params, value, side, factory=None):
        if factory is not None:
            self.factories[len(self.entries)] = factory
        self.entries.append(Entry(
            rule, cited, dict(params), int(value), side, factory is not None))
        _LOG.debug(LogMsg("Rule {} gives {} bound {}.", rule, side, value))


class BoundsEngine(object):
    """ Applies every rule, recursing into the smaller alphabets the product
    rules need. Records are cached per target.
    """

    def __init__(self, search=None, cas=()):
        """
        :param search: budget of the exact searches; None disables them
        :type search: SearchBudget or None
        :param cas: user covering arrays (s = 1), verified here
        :type cas: [OrderedArray]
        """
        self._search = search
        self._cas = []
        for ca in cas:
            if ca.s != 1:
                raise InvalidArgumentError(
                    "{} is not a covering array (s != 1).".format(ca))
            self._cas.append(verified(ca))
        self._k = {}
        self._ocan = {}
        self._direct_ocan = {}

    def covering_array(self, t, m, v=2):
        """ Smallest known CA(N;t,m,v) as (N, factory), or None.

        Kleitman-Spencer arrays cover t = 2, v = 2; everything else comes
        from the user arrays.
        """
        best = None
        if t == 2 and v == 2 and m >= 2:
            best = (kleitman_spencer_number(m),
                    lambda: kleitman_spencer_ca(m))
        for ca in self._cas:
            if ca.v == v and ca.t >= t and ca.m >= m and \
                    (best is None or ca.N < best[0]):
                best = (ca.N, lambda ca=ca: ca.with_entries(
                    ca.entries[:, :m], t=t, m=m))
        return best

    def k_bounds(self, q, m, s, R):
        """
        :rtype: BoundRecord
        """
        key = (q, m, s, R)
        if key not in self._k:
            self._k[key] = self._k_record(q, m, s, R)
        return self._k[key]

    def _k_record(self, q, m, s, R):  # pylint: disable=too-many-locals
        poset = RTPoset(m, s)
        n = poset.size
        if q < 2 or not 0 < R < n:
            raise InvalidArgumentError(
                "K bounds need q >= 2 and 0 < R < {}, got q={} R={}.".format(
                    n, q, R))
        t = n - R
        chain = _Chain()
        volume = sphere_volume(q, m, s, R)
        chain.add("sphere", "K >= ceil(q^(ms) / V_q(m,s,R))",
                  {"V": volume}, _ceil_div(q ** n, volume), LOWER)
        if m >= (t - 1) * q + 1:
            chain.add("constant-code", "K = q if m >= (t-1)q+1",
                      {"t": t}, q, EXACT, lambda: constant_code(q, m, s, R))
        else:
            chain.add("constant-code", "K >= q", {}, q, LOWER)
        chain.add("trivial", "K <= q^(ms-R)", {}, q ** t,
                  UPPER, self._bounded(q ** t, lambda: trivial_covering(
                      q, m, s, R)))
        self._k_teo1(chain, q, m, s, t)
        if m == 2 and R == s and s >= 2:
            chain.add("twochains-1", "K_v(2,s,s) <= v^(s-2)(v^2-1)",
                      {"v": q}, q ** (s - 2) * (q * q - 1), UPPER,
                      lambda: two_chain_code(q, s))
        if m == 3 and R == 2 * s - 1 and s >= 2:
            chain.add("twochains-2", "K_v(3,s,2s-1) <= v(v^s-1)",
                      {"v": q}, q * (q ** s - 1), UPPER,
                      lambda: three_chain_code(q, s))
        self._k_products(chain, q, m, s, R, t)
        self._k_formulas(chain, q, m, s, R)
        self._k_search(chain, q, m, s, R)
        record = BoundRecord(KIND_K, (q, m, s, R), chain.entries,
                             chain.factories)
        _LOG.info(LogMsg("{}: lower {} ({}), upper {} ({}).", record.target,
                         record.lower, lambda: ",".join(record.lower_rules),
                         record.upper, lambda: ",".join(record.upper_rules)))
        return record

    @staticmethod
    def _bounded(size, factory):
        return factory if size <= DEFAULT_POINT_BUDGET else None

    def _k_teo1(self, chain, q, m, s, t):
        if t < 2 or m != (t - 1) * q:
            return
        ca = self.covering_array(t, m)
        if ca is None:
            _LOG.debug(LogMsg("teo1 needs CA(N;{},{},2), none known.", t, m))
            return
        n_rows, make_ca = ca

        def factory():
            return lift_hamming_to_rt(
                surjective_hamming_code(q, t, make_ca()), s)

        chain.add("teo1", "K_q((t-1)q,s,(t-1)qs-t) <= q-2+CAN(t,(t-1)q,2)",
                  {"t": t, "CAN": n_rows}, q - 2 + n_rows, UPPER, factory)

    def _k_products(  # pylint: disable=too-many-arguments
            self, chain, q, m, s, R, t):
        if t < 2 or s > t:
            return
        pairs = _factor_pairs(q)
        for a, b in pairs:
            if not (_is_prime_power(a) and m <= a + 1):
                continue
            inner = self.k_bounds(b, m, s, R)

            def factory(a=a, inner=inner):
                return product_code(ooa_for(t, m, s, a), inner.witness())

            chain.add(
                "corol4-2",
                "K_qv(m,s,ms-t) <= q^t K_v(m,s,ms-t), q prime power, "
                "m <= q+1, s <= t",
                {"q": a, "v": b, "t": t, "K_v": inner.upper},
                a ** t * inner.upper, UPPER,
                factory if is_supported_order(a) and inner.constructive
                else None)
        for v, rest in pairs:
            ocan = self.ocan_bounds(t, m, s, v)
            inner = self.k_bounds(rest, m, s, R)

            def factory(ocan=ocan, inner=inner):
                return product_code(ocan.witness(), inner.witness())

            chain.add(
                "teoca", "K_vq(m,s,R) <= OCAN(ms-R,m,s,v) K_q(m,s,R)",
                {"v": v, "q": rest, "OCAN": ocan.upper, "K_q": inner.upper},
                ocan.upper * inner.upper, UPPER,
                factory if ocan.constructive and inner.constructive
                else None)

    def _k_formulas(  # pylint: disable=too-many-arguments
            self, chain, q, m, s, R):
        """ Composite rules whose chains pass through results without a
        construction here; their entries are never constructive.
        """
        for p, v in _factor_pairs(q):
            if not _is_prime_power(p) or s < 2:
                continue
            if m == p + 1 and R == p * s and p + 1 <= (s - 1) * v:
                chain.add(
                    "corol5-1",
                    "K_qv(q+1,t,qt) <= q^t v^(t-2)(v^2-1), q+1 <= (t-1)v",
                    {"q": p, "v": v, "t": s},
                    p ** s * v ** (s - 2) * (v * v - 1), UPPER)
            if 3 <= m <= p + 1 and R == m * s - (s + 1):
                chain.add(
                    "corol5-2",
                    "K_qv(m,s,ms-(s+1)) <= q^(s+1) v(v^s-1), m <= q+1",
                    {"q": p, "v": v},
                    p ** (s + 1) * v * (v ** s - 1), UPPER)
        for v in range(2, q // 2 + 1):
            p = q // v + 1
            if q % v or not _is_prime_power(p) or p < 3 or s < 2:
                continue
            if m == p + 1 and R == p * s:
                inner = self.k_bounds(v, m, s, R)
                chain.add(
                    "corol4-3",
                    "K_(q-1)v(q+1,t,qt) <= (q^t-2) K_v(q+1,t,qt)",
                    {"q": p, "v": v, "t": s, "K_v": inner.upper},
                    (p ** s - 2) * inner.upper, UPPER)
                chain.add(
                    "corol5-3",
                    "K_(q-1)v(q+1,t,qt) <= (q^t-2) v^(t-2)(v^2-1)",
                    {"q": p, "v": v, "t": s},
                    (p ** s - 2) * v ** (s - 2) * (v * v - 1), UPPER)
        self._k_teoca_cor(chain, q, m, s, R)

    def _k_teoca_cor(  # pylint: disable=too-many-arguments
            self, chain, q, m, s, R):
        if q % 2 or m % 2 or not 2 <= s <= 3:
            return
        half_q, half_m = q // 2, m // 2
        if not (half_q < half_m <= 2 * half_q and R == m * s - 3):
            return
        ocan = self.ocan_bounds(3, half_m, s, 2)
        can = kleitman_spencer_number(half_m)
        chain.add(
            "teoca-cor-1",
            "K_2q(2m,s,2ms-3) <= q(OCAN(3,m,s,2)+CAN(2,m,2)), "
            "q < m <= 2q, 2 <= s <= 3",
            {"q": half_q, "m": half_m, "OCAN": ocan.upper, "CAN": can},
            half_q * (ocan.upper + can), UPPER)

    def _k_search(  # pylint: disable=too-many-arguments
            self, chain, q, m, s, R):
        if self._search is None:
            return
        try:
            result = exact_covering_number(q, m, s, R, self._search)
        except ResourceLimitError as error:
            _LOG.debug(LogMsg("No covering search for K_{}({},{},{}): {}",
                              q, m, s, R, error))
            return
        params = {"nodes": result.nodes}
        if result.exact:
            chain.add("search", "exact branch and bound", params,
                      result.upper, EXACT, lambda: result.witness)
        else:
            chain.add("search", "branch and bound interval", params,
                      result.lower, LOWER)
            chain.add("search", "branch and bound interval", params,
                      result.upper, UPPER, lambda: result.witness)

    def ocan_bounds(self, t, m, s, v):
        """
        :rtype: BoundRecord
        """
        key = (t, m, s, v)
        if key not in self._ocan:
            chain = self._ocan_chain(t, m, s, v)
            self._ocan_transfer(chain, t, m, s, v)
            self._ocan_search(chain, t, m, s, v)
            record = BoundRecord(KIND_OCAN, key, chain.entries,
                                 chain.factories)
            _LOG.info(LogMsg("{}: lower {}, upper {} ({}).", record.target,
                             record.lower, record.upper,
                             lambda: ",".join(record.upper_rules)))
            self._ocan[key] = record
        return self._ocan[key]

    def _ocan_direct(self, t, m, s, v):
        """ Record from the direct rules only (no depth transfer). """
        key = (t, m, s, v)
        if key not in self._direct_ocan:
            chain = self._ocan_chain(t, m, s, v)
            self._direct_ocan[key] = BoundRecord(
                KIND_OCAN, key, chain.entries, chain.factories)
        return self._direct_ocan[key]

    def _ocan_chain(self, t, m, s, v):
        poset = check_oca_parameters(t, m, s, v)
        n = poset.size
        chain = _Chain()
        chain.add("trivial-lower", "OCAN >= v^t", {}, v ** t, LOWER)

        def everything():
            return OrderedArray(digits(np.arange(v ** n), v, n), t, m, s, v)

        chain.add("full-space", "OCAN <= v^(ms)", {}, v ** n, UPPER,
                  self._bounded(v ** n, everything))
        if t == 2 and v == 2 and s <= 2 and m >= 2:

            def kleitman_spencer():
                ca = kleitman_spencer_ca(m)
                return ca if s == 1 else oca_depth2_from_ca(ca)

            chain.add(
                "kleitman-spencer",
                "OCAN(2,m,s,2) = CAN(2,m,2) = min N with "
                "m <= C(N-1,floor(N/2)-1), s <= 2",
                {}, kleitman_spencer_number(m), EXACT, kleitman_spencer)
        if _is_prime_power(v) and m <= v + 1:
            chain.add("ooa", "OCAN(t,m,s,q) = q^t, q prime power, m <= q+1",
                      {"q": v}, v ** t, EXACT,
                      (lambda: ooa_for(t, m, s, v))
                      if is_supported_order(v) else None)
        if _is_prime_power(v + 1) and m <= v + 2:
            chain.add("fusion",
                      "OCAN(t,m,s,q-1) <= q^t-2, q prime power, m <= q+1",
                      {"q": v + 1}, (v + 1) ** t - 2, UPPER,
                      (lambda: fused_oca_for(t, m, s, v))
                      if is_supported_order(v + 1) else None)
        for index, ca in enumerate(self._cas):
            if ca.v == v and ca.t >= t and ca.m >= n:
                chain.add(
                    "ca-file", "OCAN(t,m,s,v) <= CAN(t,ms,v)",
                    {"file": index, "CAN": ca.N}, ca.N, UPPER,
                    lambda ca=ca: OrderedArray(ca.entries[:, :n], t, m, s, v))
        return chain

    def _ocan_transfer(  # pylint: disable=too-many-arguments
            self, chain, t, m, s, v):
        cited = "OCAN(t,m,t,v) = OCAN(t,m,t-1,v), m >= 2"
        if m < 2 or t < 2:
            return
        if s == t and t <= m * (t - 1):
            other = self._ocan_direct(t, m, t - 1, v)

            def factory():
                return extend_depth(other.witness())

        elif s == t - 1:
            other = self._ocan_direct(t, m, t, v)

            def factory():
                return restrict(other.witness(), DROP_BOTTOM_LEVEL)

        else:
            return
        params = {"s": other.params[2]}
        chain.add("depth-transfer", cited, params, other.lower, LOWER)
        chain.add("depth-transfer", cited, params, other.upper, UPPER,
                  factory if other.constructive else None)

    def _ocan_search(  # pylint: disable=too-many-arguments
            self, chain, t, m, s, v):
        if self._search is None:
            return
        result = exact_ocan(t, m, s, v, self._search)
        params = {"nodes": result.nodes}
        witness = result.witness
        if result.exact:
            chain.add("search", "exact row search", params, result.upper,
                      EXACT, lambda: witness)
        else:
            chain.add("search", "row search interval", params, result.lower,
                      LOWER)
            chain.add("search", "row search interval", params, result.upper,
                      UPPER, (lambda: witness) if witness is not None
                      else None)


def k_bounds(q, m, s, R, search=None, cas=()):
    """ Bounds on K_q^RT(m,s,R) from a fresh engine.

    :rtype: BoundRecord
    """
    return BoundsEngine(search, cas).k_bounds(q, m, s, R)


def ocan_bounds(t, m, s, v, search=None, cas=()):
    """ Bounds on OCAN(t,m,s,v) from a fresh engine.

    :rtype: BoundRecord
    """
    return BoundsEngine(search, cas).ocan_bounds(t, m, s, v)


def witness_file_name(record):
    names = _PARAM_NAMES[record.kind]
    stem = "_".join([record.kind] + [
        "{}{}".format(n, p) for n, p in zip(names, record.params)])
    return stem + (".code" if record.kind == KIND_K else ".oca")


def write_witness(record, directory):
    """ Write the verified witness of record into directory, read it back
    and verify it again.

    :return: the file path, None when the record has no construction
    :raise ConstructionError: if the witness fails verification
    """
    witness = record.witness()
    if witness is None:
        return None
    path = os.path.join(directory, witness_file_name(record))
    if record.kind == KIND_K:
        write_code(witness, path)
        verified_code(read_witness(path))
    else:
        write_array(witness, path)
        verified(read_witness(path))
    return path


def recheck_witness(path):
    """ Re-verify a witness file.

    :rtype: designs.CoverageReport or codes.CoveringReport
    """
    witness = read_witness(path)
    if isinstance(witness, OrderedArray):
        return verify_oca(witness)
    return verify_covering(witness)


Comparison = namedtuple("Comparison", ["applies", "composite", "direct"])


def comparison_claim(q, v, t):
    """ Composite bound q^t v^(t-2)(v^2-1) against the direct two chain
    bound (qv)^(t-2)((qv)^2-1) on K_qv^RT(q+1,t,qt).

    applies tells whether q is a prime power with q+1 <= (t-1)v.

    :rtype: Comparison
    """
    if q < 2 or v < 2 or t < 2:
        raise InvalidArgumentError(
            "Need q, v, t >= 2, got q={} v={} t={}.".format(q, v, t))
    qv = q * v
    return Comparison(
        _is_prime_power(q) and q + 1 <= (t - 1) * v,
        q ** t * v ** (t - 2) * (v * v - 1),
        qv ** (t - 2) * (qv * qv - 1))


def parse_request(line, number=None):
    """ 'K q m s R' or 'OCAN t m s v'.

    :rtype: (str, (int, int, int, int))
    :raise FormatError: on anything else
    """
    parts = line.split()
    if len(parts) != 5 or parts[0].upper() not in _PARAM_NAMES:
        raise FormatError(
            "Expected 'K q m s R' or 'OCAN t m s v', got '{}'.".format(
                line.strip()), number)
    try:
        values = tuple(int(x) for x in parts[1:])
    except ValueError:
        raise FormatError(
            "Request '{}' has non integer parameters.".format(line.strip()),
            number)
    return parts[0].upper(), values


def evaluate(engine, kind, params):
    if kind == KIND_K:
        return engine.k_bounds(*params)
    return engine.ocan_bounds(*params)


_CSV_FIELDS = ("request", "lower", "lower_rules", "upper", "upper_rules",
               "constructive", "chain", "error")


def _rows(requests, engine):
    """ (request text, record or None, error or None) per request line. """
    rows = []
    for number, line in enumerate(requests, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            kind, params = parse_request(text, number)
            rows.append((text, evaluate(engine, kind, params), None))
        except RTCoverError as error:
            _LOG.warning(LogMsg("Request '{}' failed: {}", text, error))
            rows.append((text, None, str(error)))
    return rows


def _chain_text(record):
    return ";".join("{}:{}={}".format(e.rule, e.side, e.value)
                    for e in record.chain)


def record_lines(record, label=None):
    """ Summary line plus one indented line per chain entry. """
    lines = ["{}: {} <= {} <= {} [lower: {}; upper: {}; {}]".format(
        label or record.target, record.lower, record.target, record.upper,
        ",".join(record.lower_rules), ",".join(record.upper_rules),
        "constructive" if record.constructive else "formula-only")]
    lines.extend(
        "    {} {} {} {} ({}){}".format(
            e.rule, e.side, e.value, json.dumps(e.params, sort_keys=True),
            e.cited, "" if e.constructive else " formula-only")
        for e in record.chain)
    return lines


def emit_table(requests, fmt="text", engine=None):
    """ Render the bounds of every request line.

    :param requests: lines 'K q m s R' or 'OCAN t m s v'; blank lines and
        '#' comments are skipped
    :param fmt: 'text', 'csv' or 'json'
    :return: (document, True iff every request was answered)
    :rtype: (str, bool)
    """
    engine = engine or BoundsEngine()
    rows = _rows(requests, engine)
    ok = all(error is None for _, _, error in rows)
    if fmt == "json":
        document = json.dumps(
            [dict(record.to_dict(), request=text) if record is not None
             else {"request": text, "error": error}
             for text, record, error in rows],
            indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_CSV_FIELDS)
        for text, record, error in rows:
            if record is None:
                writer.writerow([text, "", "", "", "", "", "", error])
            else:
                writer.writerow([
                    text, record.lower, ",".join(record.lower_rules),
                    record.upper, ",".join(record.upper_rules),
                    "yes" if record.constructive else "formula-only",
                    _chain_text(record), ""])
        document = out.getvalue()
    elif fmt == "text":
        lines = []
        for text, record, error in rows:
            if record is None:
                lines.append("{}: error: {}".format(text, error))
            else:
                lines.extend(record_lines(record, text))
        document = "\n".join(lines) + "\n"
    else:
        raise InvalidArgumentError("Unknown format '{}'.".format(fmt))
    return document, ok
