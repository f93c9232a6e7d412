#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "wangauth/scheme/server.hpp"
#include "wangauth/simenv/clock.hpp"
#include "wangauth/simenv/session.hpp"
#include "wangauth/simenv/transcript_json.hpp"

using namespace wangauth;
using namespace wangauth::scheme;
using namespace wangauth::simenv;

namespace {

struct Fixture {
    explicit Fixture(std::uint64_t seed = 1, HashFn h = sha256_hash(), std::uint64_t delta_t = 60)
        : rng(seed),
          server(ServerState::generate(h, rng, delta_t)),
          reg(register_user(server, "alice", PasswordSource::random_alphanumeric(), rng)),
          clock(Timestamp{1'000'000})
    {}

    Rng rng;
    ServerState server;
    RegistrationOutput reg;
    SimClock clock;
};

} // namespace

TEST_CASE("SimClock only moves forward")
{
    SimClock clock(Timestamp{10});
    clock.advance(5);
    CHECK(clock.now() == Timestamp{15});
    clock.advance_to(Timestamp{20});
    CHECK(clock.now() == Timestamp{20});
    CHECK_THROWS_AS(clock.advance_to(Timestamp{19}), std::invalid_argument);
    CHECK_THROWS_AS(clock.advance(~0ull), std::overflow_error);
}

TEST_CASE("run_honest_session")
{
    Fixture f;
    const std::uint64_t dt = f.server.delta_t();

    SECTION("zero latency: both sides accept")
    {
        auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password, f.clock);
        REQUIRE(outcome.server);
        CHECK(outcome.server->accepted());
        CHECK(outcome.user == true);
        CHECK(transcript.events().size() == 2);
        CHECK(outcome.t == Timestamp{1'000'000});
        CHECK(outcome.t_server == outcome.t);
        CHECK(outcome.t_user == outcome.t);
        CHECK(transcript.outcome().sessions == std::vector{outcome});
    }
    SECTION("uplink slower than the window: stale, no reply")
    {
        auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password,
                                                        f.clock, {dt + 1, 0});
        CHECK(outcome.server->reject_reason == RejectReason::stale);
        CHECK_FALSE(outcome.user.has_value());
        CHECK_FALSE(outcome.t_user.has_value());
        CHECK(transcript.events().size() == 1);
    }
    SECTION("downlink slower than the window: server accepts, user refuses")
    {
        auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password,
                                                        f.clock, {0, dt + 1});
        CHECK(outcome.server->accepted());
        CHECK(outcome.user == false);
        CHECK(*outcome.t_user == outcome.t_server + (dt + 1));
    }
    SECTION("timestamps follow the latencies and the clock ends at T*")
    {
        auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password,
                                                        f.clock, {7, 11});
        CHECK(outcome.t_server == outcome.t + 7);
        CHECK(*outcome.t_user == outcome.t_server + 11);
        CHECK(f.clock.now() == *outcome.t_user);
        CHECK(transcript.events()[0].sent_at == outcome.t);
        CHECK(transcript.events()[1].sent_at == outcome.t_server);
        CHECK(transcript.events()[0].seq < transcript.events()[1].seq);
    }
}

TEST_CASE("intercept")
{
    Fixture f;
    auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password, f.clock);

    const ChannelEvent up = intercept(transcript, travelling(Direction::user_to_server));
    const auto& req = std::get<LoginRequest>(up.payload);
    CHECK(req.id == encode_identity(sha256_hash(), "alice"));
    CHECK(req.n == f.reg.card.n_i());
    CHECK(req.cid.size() == 32);
    CHECK(req.t == outcome.t);
    CHECK_FALSE(up.tampered);

    const ChannelEvent down = intercept(transcript, travelling(Direction::server_to_user));
    const auto& reply = std::get<ServerReply>(down.payload);
    CHECK(reply.t_server == outcome.t_server);
    CHECK(reply.a.size() == 32);
    CHECK(intercept_server_reply(transcript) == reply);
    CHECK(intercept_login_request(transcript) == req);

    CHECK_THROWS_AS(intercept(Transcript{}, travelling(Direction::user_to_server)), NotFound);
    CHECK_THROWS_AS(intercept(transcript, [](const ChannelEvent& ev) { return ev.seq > 5; }), NotFound);
}

TEST_CASE("intercept is passive")
{
    Fixture f;
    auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password, f.clock);
    const Transcript transcript_before = transcript;
    const ServerState server_before = f.server;
    const Block n_before = f.reg.card.n_i();
    for (int i = 0; i < 100; ++i)
        (void)intercept(transcript, travelling(i % 2 ? Direction::user_to_server : Direction::server_to_user));
    CHECK(transcript == transcript_before);
    CHECK(f.server == server_before);
    CHECK(f.reg.card.n_i() == n_before);
}

TEST_CASE("inject")
{
    Fixture f;
    Transcript transcript;

    SECTION("fresh honest request is accepted and recorded as tampered")
    {
        const LoginRequest req = card_login(f.reg.card, "alice", f.reg.password, f.clock.now());
        const InjectResult r = inject(f.server, req, f.clock, transcript);
        CHECK(accepted(r.verdict));
        CHECK(r.event.tampered);
        CHECK(r.event.sent_at == f.clock.now());
        CHECK(transcript.events().size() == 2);
        CHECK_FALSE(transcript.events()[1].tampered);
    }
    SECTION("replay after the window is stale")
    {
        const LoginRequest req = card_login(f.reg.card, "alice", f.reg.password, f.clock.now());
        f.clock.advance(f.server.delta_t() + 1);
        const InjectResult r = inject(f.server, req, f.clock, transcript);
        CHECK(reject_reason(r.verdict) == RejectReason::stale);
        CHECK(transcript.events().size() == 1);
    }
}

TEST_CASE("inject_reply records a tampered reply and applies the downlink delay")
{
    Fixture f;
    Transcript transcript;
    const Verdict v = server_verify(f.server, card_login(f.reg.card, "alice", f.reg.password, f.clock.now()),
                                    f.clock.now());
    const ServerReply reply = std::get<Accept>(v).reply;
    CHECK(inject_reply(f.reg.card, f.reg.password, reply, f.clock, 3, f.server.delta_t(), transcript));
    CHECK(transcript.events().back().tampered);
    CHECK(transcript.events().back().sent_at == reply.t_server);
    CHECK(f.clock.now() == reply.t_server + 3);
    CHECK_FALSE(inject_reply(f.reg.card, f.reg.password, reply, f.clock, f.server.delta_t(),
                             f.server.delta_t(), transcript));
}

TEST_CASE("property: same seed, same transcript bytes")
{
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        Fixture a(seed), b(seed);
        auto [ta, oa] = run_honest_session(a.server, a.reg.card, "alice", a.reg.password, a.clock, {3, 4});
        auto [tb, ob] = run_honest_session(b.server, b.reg.card, "alice", b.reg.password, b.clock, {3, 4});
        REQUIRE(to_jsonl(ta) == to_jsonl(tb));
    }
    Fixture a(1), b(2);
    auto [ta, oa] = run_honest_session(a.server, a.reg.card, "alice", a.reg.password, a.clock);
    auto [tb, ob] = run_honest_session(b.server, b.reg.card, "alice", b.reg.password, b.clock);
    CHECK(to_jsonl(ta) != to_jsonl(tb));
}

TEST_CASE("property: replaying a recorded request reproduces the recorded decision")
{
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Fixture f(rng.next());
        const Latency latency{rng.between(0, 2 * f.server.delta_t()), rng.between(0, 2 * f.server.delta_t())};
        const std::string pw = rng.below(4) == 0 ? "wrong" : f.reg.password;
        auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", pw, f.clock, latency);
        const Transcript reread = from_jsonl(to_jsonl(transcript));
        const auto req = intercept_login_request(reread);
        const auto& session = reread.outcome().sessions.at(0);
        const Verdict replayed = server_verify(f.server, req, session.t_server);
        REQUIRE(ServerDecision::from(replayed) == *session.server);
    }
}

TEST_CASE("transcript JSON lines")
{
    Fixture f;
    auto [transcript, outcome] = run_honest_session(f.server, f.reg.card, "alice", f.reg.password, f.clock);
    transcript.outcome().attack = AttackSummary{"dos", true, {{"k", "v"}, {"a", "b"}}};
    const std::string text = to_jsonl(transcript);

    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    REQUIRE(lines.size() == 3);
    const auto req = std::get<LoginRequest>(transcript.events()[0].payload);
    CHECK(lines[0] == R"({"seq":0,"direction":"user->server","type":"login_request","sent_at":1000000,"tampered":false,"id":")" +
                          req.id.to_hex() + R"(","cid":")" + req.cid.to_hex() + R"(","n":")" + req.n.to_hex() +
                          R"(","t":1000000})");
    CHECK(lines[1].rfind(R"({"seq":1,"direction":"server->user","type":"server_reply",)", 0) == 0);
    CHECK(lines[2] == R"({"type":"outcome","sessions":[{"server_decision":"accept","reason":null,"user_decision":true,"t":1000000,"t_server":1000000,"t_user":1000000}],"attack":"dos","result":"success","derived":{"k":"v","a":"b"}})");

    const Transcript back = from_jsonl(text);
    CHECK(back == transcript);
    CHECK(to_jsonl(back) == text);
}

TEST_CASE("transcript JSON: round trip over random sessions")
{
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        Fixture f(rng.next(), rng.below(2) ? sha256_hash() : toy16_hash());
        Transcript t;
        for (int k = 0; k < 3; ++k) {
            const Latency latency{rng.between(0, 100), rng.between(0, 100)};
            t.outcome().sessions.push_back(
                run_honest_session(f.server, f.reg.card, "alice", f.reg.password, f.clock, latency, t));
        }
        t.outcome().sessions.push_back(SessionOutcome{std::nullopt, false, Timestamp{1}, Timestamp{2}, Timestamp{3}});
        REQUIRE(from_jsonl(to_jsonl(t)) == t);
    }
}

TEST_CASE("transcript JSON: malformed input")
{
    CHECK_THROWS_AS(from_jsonl(""), std::invalid_argument);
    CHECK_THROWS_AS(from_jsonl("not json\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_jsonl(R"({"seq":0,"direction":"sideways","type":"server_reply","sent_at":1,"tampered":false,"a":"00","t_server":1})"
                               "\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_jsonl(R"({"type":"outcome","sessions":[]})"
                               "\n"
                               R"({"type":"outcome","sessions":[]})"
                               "\n"),
                    std::invalid_argument);
    CHECK(from_jsonl(R"({"type":"outcome","sessions":[]})").empty());
}

TEST_CASE("Transcript: seq strictly increasing")
{
    Transcript t;
    const auto& first = t.record(Direction::user_to_server, ServerReply{Block::zero(2), {}}, {});
    CHECK(first.seq == 0);
    CHECK(t.record(Direction::server_to_user, ServerReply{Block::zero(2), {}}, {}).seq == 1);
    ChannelEvent ev{1, Direction::user_to_server, ServerReply{Block::zero(2), {}}, {}, false};
    CHECK_THROWS_AS(t.append(ev), std::invalid_argument);
    ev.seq = 5;
    CHECK_NOTHROW(t.append(ev));
}
