#include "groupfair/presets.hpp"

namespace groupfair {

Instance example1_instance() {
    Instance instance;
    instance.agent_names = {"a1", "a2", "a3"};
    instance.item_names = {"o1", "o2", "o3"};
    const Rational half3(3, 2);
    instance.models.push_back(AdditiveModel{{Rational(1), half3, Rational(2)}});
    instance.models.push_back(AdditiveModel{{half3, Rational(2), Rational(1)}});
    instance.models.push_back(AdditiveModel{{Rational(2), Rational(1), half3}});
    return instance;
}

Allocation example1_balanced_allocation() { return Allocation{{1, 0, 2}}; }

Instance example3_instance() {
    Instance instance;
    instance.agent_names = {"a1", "a2"};
    instance.item_names = {"o1", "o2"};
    instance.models.push_back(AdditiveModel{{Rational(1), Rational(2)}});
    instance.models.push_back(AdditiveModel{{Rational(2), Rational(1)}});
    return instance;
}

}  // namespace groupfair
