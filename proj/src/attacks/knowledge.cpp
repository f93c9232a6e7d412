#include "wangauth/attacks/attacks.hpp"

#include <stdexcept>

namespace wangauth::attacks {

AdversaryKnowledge::AdversaryKnowledge(HashFn h, std::vector<std::string> dictionary)
    : h_(std::move(h)), dictionary_(std::move(dictionary))
{}

void AdversaryKnowledge::learn_card(const scheme::SmartCard& card)
{
    y_ = extract_card_secrets(card).y;
}

void AdversaryKnowledge::observe(const scheme::LoginRequest& req)
{
    observed_.push_back(req);
}

const Block& AdversaryKnowledge::derive_password_hash()
{
    if (!y_)
        throw std::logic_error("AdversaryKnowledge: y has not been extracted");
    if (observed_.empty())
        throw std::logic_error("AdversaryKnowledge: no login request observed");
    hpw_ = recover_password_hash(*y_, observed_.back(), h_);
    return *hpw_;
}

const Block& AdversaryKnowledge::derive_hx()
{
    if (!hpw_)
        throw std::logic_error("AdversaryKnowledge: h(PW) has not been derived");
    const auto& req = observed_.back();
    hx_ = recover_hx(*hpw_, req.n, req.id);
    return *hx_;
}

std::optional<std::string> AdversaryKnowledge::guess() const
{
    if (!hpw_)
        throw std::logic_error("AdversaryKnowledge: h(PW) has not been derived");
    return guess_password(*hpw_, dictionary_, h_);
}

} // namespace wangauth::attacks
