#include <string.h>

int main(void)
{
    int counts[16];
    memset(counts, 0, sizeof(counts));
    return counts[0];
}
