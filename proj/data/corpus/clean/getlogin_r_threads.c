#include <pthread.h>
#include <stdio.h>
#include <unistd.h>

void *worker(void *arg)
{
    char name[64];
    if (getlogin_r(name, sizeof(name)) == 0)
        printf("%s\n", name);
    return arg;
}

int main(void)
{
    pthread_t t;
    pthread_create(&t, NULL, worker, NULL);
    pthread_join(t, NULL);
    return 0;
}
